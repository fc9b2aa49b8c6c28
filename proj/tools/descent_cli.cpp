#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "descent/io.hpp"
#include "descent/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

unsigned worker_count() {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DESCENT_WORKERS")) {
        const int cap = std::atoi(env);
        if (cap > 0) workers = std::min(workers, static_cast<unsigned>(cap));
    }
    return workers;
}

bool request_is_valid(const std::pair<std::string, int>& request) {
    for (const auto& info : descent::identity_registry())
        if (info.id == request.first) return request.second >= info.min_n && request.second <= info.max_n;
    return false;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Descent algebra structure constants and identity checks"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Omit wall times from reports");

    std::string kind, format = "json", out_path;
    int n = 0;
    auto* compute = app.add_subcommand("compute", "Compute a table");
    compute->add_option("kind", kind, "a, b, c, d, dB, kostka, chi, psi, g, gB, m2 or m3")->required();
    compute->add_option("--n", n, "Rank")->required();
    compute->add_option("--format", format, "json or csv");
    compute->add_option("--out", out_path, "Output file (default stdout)");

    std::string identity;
    auto* verify = app.add_subcommand("verify", "Check one identity at rank n");
    verify->add_option("identity", identity, "Identity id (see list)")->required();
    verify->add_option("--n", n, "Rank")->required();

    std::string config_path;
    auto* verify_all = app.add_subcommand("verify-all", "Check every identity for n = 1..max");
    verify_all->add_option("--config", config_path, "JSON object mapping identity id to max n");

    auto* list = app.add_subcommand("list", "List identities and their ranges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) {
            return write_output(descent::io::compute_table(kind, n, descent::io::parse_format(format)), out_path);
        }
        if (*verify) {
            const auto report = descent::verify_identity(identity, n);
            std::cout << descent::io::render_report(report, !no_timing);
            return report.status == descent::VerificationStatus::Pass ? 0 : kExitFailure;
        }
        if (*verify_all) {
            auto requests = descent::io::default_config();
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw descent::usage_error("cannot read config " + config_path);
                std::stringstream text;
                text << in.rdbuf();
                requests = descent::io::parse_config(text.str());
            }
            const auto reports = descent::verify_many(requests, worker_count());
            std::cout << descent::io::render_reports(reports, !no_timing);
            // Each invalid request yields exactly one Error entry; anything beyond that is a real failure.
            const auto invalid = std::count_if(requests.begin(), requests.end(),
                                               [](const auto& r) { return !request_is_valid(r); });
            const auto not_passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) {
                return r.status != descent::VerificationStatus::Pass;
            });
            if (not_passed > invalid) return kExitFailure;
            return invalid ? kExitUsage : 0;
        }
        if (*list) {
            for (const auto& info : descent::identity_registry())
                std::cout << info.id << "  n=" << info.min_n << ".." << info.max_n << " (default " << info.default_n
                          << ")  " << info.description << "\n";
            return 0;
        }
    } catch (const descent::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
