#include "descent/io.hpp"

#include <map>
#include <sstream>

#include "descent/descent_a.hpp"
#include "descent/descent_b.hpp"
#include "json.hpp"

namespace descent::io {

using ojson = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header) { row(header); }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << csv_field(fields[i]);
        out_ << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string group_name(Group g) { return g == Group::Symmetric ? "S" : "B"; }

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw usage_error("unknown format '" + name + "' (expected json or csv)");
}

namespace {

const std::vector<std::pair<std::string, int>>& bounds() {
    static const std::vector<std::pair<std::string, int>> table = {
        {"a", 7},     {"b", 7}, {"c", 5}, {"d", 8},  {"dB", 5}, {"kostka", 8},
        {"chi", 8},   {"psi", 5}, {"g", 6}, {"gB", 4}, {"m2", 6}, {"m3", 4},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& compute_kinds() {
    static const std::vector<std::string> kinds = [] {
        std::vector<std::string> out;
        for (const auto& [k, b] : bounds()) out.push_back(k);
        return out;
    }();
    return kinds;
}

int compute_bound(const std::string& kind) {
    for (const auto& [k, b] : bounds())
        if (k == kind) return b;
    throw usage_error("unknown table kind '" + kind + "'");
}

std::string compute_table(const std::string& kind, int n, Format format) {
    const int bound = compute_bound(kind);
    if (n < 1 || n > bound)
        throw usage_error("n=" + std::to_string(n) + " is outside [1, " + std::to_string(bound) + "] for " + kind);
    if (kind == "a") return render_constant_table(a_constants(n), format);
    if (kind == "b") return render_constant_table(b_constants(n), format);
    if (kind == "c") return render_constant_table(c_constants(n), format);
    if (kind == "d") return render_d_table(d_table(n), kind, n, format);
    if (kind == "dB") return render_d_table(dB_table(n), kind, n, format);
    if (kind == "kostka") return render_kostka_table(n, format);
    if (kind == "chi") return render_character_table(symmetric_character_table(n), format);
    if (kind == "psi") return render_character_table(hyperoctahedral_character_table(n), format);
    if (kind == "g") return render_kronecker_table(kronecker_table(symmetric_character_table(n)), kind, n, format);
    if (kind == "gB")
        return render_kronecker_table(kronecker_table(hyperoctahedral_character_table(n)), kind, n, format);
    if (kind == "m2") return render_m2_table(n, format);
    return render_m3_table(n, format);
}

std::string render_constant_table(const ConstantTable& table, Format format) {
    const auto subs = table.subsets();
    if (format == Format::Csv) {
        CsvWriter csv({"I", "J", "K", "value"});
        for (const auto& i : subs)
            for (const auto& j : subs)
                for (const auto& k : subs)
                    if (const auto v = table(i, j, k))
                        csv.row({i.to_string(), j.to_string(), k.to_string(), std::to_string(v)});
        return csv.str();
    }
    ojson out;
    out["n"] = table.rank();
    out["flavor"] = flavor_name(table.flavor());
    out["variant"] = table.variant() == SubsetVariant::TypeA ? "A" : "B";
    auto& entries = out["entries"] = ojson::array();
    for (const auto& i : subs)
        for (const auto& j : subs)
            for (const auto& k : subs)
                entries.push_back(
                    {{"I", i.to_string()}, {"J", j.to_string()}, {"K", k.to_string()}, {"value", table(i, j, k)}});
    return dump(out);
}

std::string render_d_table(const DTable& table, const std::string& kind, int n, Format format) {
    if (format == Format::Csv) {
        CsvWriter csv({"shape", "I", "value"});
        for (const auto& [shape, row] : table)
            for (const auto& [subset, v] : row)
                if (v) csv.row({shape.to_string(), subset.to_string(), std::to_string(v)});
        return csv.str();
    }
    const auto shapes = kind == "dB" ? enumerate_P0(n) : enumerate_partitions(n);
    ojson out;
    out["n"] = n;
    out["kind"] = kind;
    auto& entries = out["entries"] = ojson::object();
    for (const auto& shape : shapes) {
        auto& row = entries[shape.to_string()] = ojson::object();
        const auto it = table.find(shape);
        if (it == table.end()) continue;
        for (const auto& [subset, v] : it->second)
            if (v) row[subset.to_string()] = v;
    }
    return dump(out);
}

std::string render_kostka_table(int n, Format format) {
    const auto shapes = enumerate_partitions(n);
    if (format == Format::Csv) {
        CsvWriter csv({"lambda", "mu", "value"});
        for (const auto& l : shapes)
            for (const auto& m : shapes)
                if (const auto v = kostka(l, Composition(m.parts())))
                    csv.row({l.to_string(), m.to_string(), std::to_string(v)});
        return csv.str();
    }
    ojson out;
    out["n"] = n;
    out["kind"] = "kostka";
    auto& entries = out["entries"] = ojson::array();
    for (const auto& l : shapes)
        for (const auto& m : shapes)
            entries.push_back({{"lambda", l.to_string()}, {"mu", m.to_string()}, {"value", kostka(l, Composition(m.parts()))}});
    return dump(out);
}

std::string render_character_table(const CharacterTable& table, Format format) {
    const bool typeB = table.group == Group::Hyperoctahedral;
    const auto class_label = [&](const Partition& c) {
        return typeB ? two_quotient(c).to_string() : c.to_string();
    };
    if (format == Format::Csv) {
        CsvWriter csv({"character", "class", "class_size", "value"});
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            for (std::size_t c = 0; c < table.columns.size(); ++c)
                csv.row({table.rows[r].to_string(), class_label(table.columns[c]), std::to_string(table.class_sizes[c]),
                         std::to_string(table.values[r][c])});
        return csv.str();
    }
    ojson out;
    out["n"] = table.n;
    out["kind"] = typeB ? "psi" : "chi";
    out["group"] = group_name(table.group);
    auto& classes = out["classes"] = ojson::array();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        ojson cls = {{"label", class_label(table.columns[c])}, {"size", table.class_sizes[c]}};
        if (typeB) cls["shape"] = table.columns[c].to_string();
        classes.push_back(std::move(cls));
    }
    auto& rows = out["characters"] = ojson::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        ojson row = {{"label", table.rows[r].to_string()}, {"values", table.values[r]}};
        if (typeB) row["quotient"] = two_quotient(table.rows[r]).to_string();
        rows.push_back(std::move(row));
    }
    return dump(out);
}

std::string render_kronecker_table(const KroneckerTable& table, const std::string& kind, int n, Format format) {
    if (format == Format::Csv) {
        CsvWriter csv({"lambda", "mu", "nu", "value"});
        for (const auto& [key, v] : table)
            if (v) {
                const auto& [l, m, k] = key;
                csv.row({l.to_string(), m.to_string(), k.to_string(), std::to_string(v)});
            }
        return csv.str();
    }
    ojson out;
    out["n"] = n;
    out["kind"] = kind;
    auto& entries = out["entries"] = ojson::array();
    for (const auto& [key, v] : table) {
        const auto& [l, m, k] = key;
        entries.push_back({{"lambda", l.to_string()}, {"mu", m.to_string()}, {"nu", k.to_string()}, {"value", v}});
    }
    return dump(out);
}

std::string render_m2_table(int n, Format format) {
    const auto comps = enumerate_compositions(n);
    if (format == Format::Csv) {
        CsvWriter csv({"r", "c", "value"});
        for (const auto& r : comps)
            for (const auto& c : comps)
                if (const auto v = m_matrix(r, c)) csv.row({r.to_string(), c.to_string(), std::to_string(v)});
        return csv.str();
    }
    ojson out;
    out["n"] = n;
    out["kind"] = "m2";
    auto& entries = out["entries"] = ojson::array();
    for (const auto& r : comps)
        for (const auto& c : comps) entries.push_back({{"r", r.to_string()}, {"c", c.to_string()}, {"value", m_matrix(r, c)}});
    return dump(out);
}

std::string render_m3_table(int n, Format format) {
    const auto comps = enumerate_compositions(n);
    if (format == Format::Csv) {
        CsvWriter csv({"p", "q", "r", "value"});
        for (const auto& p : comps)
            for (const auto& q : comps)
                for (const auto& r : comps)
                    if (const auto v = m_3d(p, q, r))
                        csv.row({p.to_string(), q.to_string(), r.to_string(), std::to_string(v)});
        return csv.str();
    }
    ojson out;
    out["n"] = n;
    out["kind"] = "m3";
    auto& entries = out["entries"] = ojson::array();
    for (const auto& p : comps)
        for (const auto& q : comps)
            for (const auto& r : comps)
                entries.push_back(
                    {{"p", p.to_string()}, {"q", q.to_string()}, {"r", r.to_string()}, {"value", m_3d(p, q, r)}});
    return dump(out);
}

std::string render_domino_tableau(const DominoTableau& t) {
    ojson out;
    out["shape"] = t.shape().parts();
    out["mode"] = t.mode() == DominoMode::Standard ? "standard" : "semistandard";
    out["labels"] = t.label_grid();
    out["pairing"] = t.pairing_grid();
    return out.dump();
}

namespace {

ojson report_json(const VerificationReport& r, bool timing) {
    ojson j;
    j["identity"] = r.identity;
    j["n"] = r.n;
    j["alphabet_size"] = r.alphabet_size;
    j["status"] = status_name(r.status);
    j["checked"] = r.checked;
    if (r.counterexample)
        j["counterexample"] = {{"key", r.counterexample->key}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
    else
        j["counterexample"] = nullptr;
    if (!r.error.empty()) j["error"] = r.error;
    if (timing) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

}  // namespace

std::string render_report(const VerificationReport& report, bool timing) {
    ojson out;
    out["schema_version"] = kReportSchemaVersion;
    out["report"] = report_json(report, timing);
    return dump(out);
}

std::string render_reports(const std::vector<VerificationReport>& reports, bool timing) {
    ojson out;
    out["schema_version"] = kReportSchemaVersion;
    auto& list = out["reports"] = ojson::array();
    int passed = 0, failed = 0, errors = 0;
    for (const auto& r : reports) {
        list.push_back(report_json(r, timing));
        switch (r.status) {
            case VerificationStatus::Pass: ++passed; break;
            case VerificationStatus::Fail: ++failed; break;
            case VerificationStatus::Error: ++errors; break;
        }
    }
    out["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors}};
    return dump(out);
}

std::vector<std::pair<std::string, int>> parse_config(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw usage_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("config must be a JSON object mapping identity ids to n");
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [id, value] : j.items()) {
        if (!value.is_number_integer()) throw usage_error("config value for '" + id + "' is not an integer");
        out.emplace_back(id, value.get<int>());
    }
    return out;
}

std::vector<std::pair<std::string, int>> default_config() {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& info : identity_registry()) out.emplace_back(info.id, info.default_n);
    return out;
}

}  // namespace descent::io
