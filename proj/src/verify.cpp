#include "descent/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "descent/bases.hpp"
#include "descent/characters.hpp"
#include "descent/descent_a.hpp"
#include "descent/descent_b.hpp"
#include "descent/domino.hpp"
#include "descent/tableaux.hpp"

namespace descent {

std::string status_name(VerificationStatus s) {
    switch (s) {
        case VerificationStatus::Pass: return "pass";
        case VerificationStatus::Fail: return "fail";
        case VerificationStatus::Error: return "error";
    }
    return "?";
}

namespace {

std::string to_text(const Integer& v) { return v.get_str(); }
std::string to_text(std::int64_t v) { return std::to_string(v); }
std::string to_text(bool v) { return v ? "true" : "false"; }

std::string monomial_text(const Monomial& m, const Alphabet& x) {
    if (m.entries().empty()) return "1";
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += x.name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Records the first mismatch; later mismatches only count.
class Checker {
public:
    explicit Checker(VerificationReport& report) : report_(report) {}

    template <class L, class R>
    bool equal(const std::string& key, const L& lhs, const R& rhs) {
        ++report_.checked;
        if (lhs == rhs) return true;
        fail(key, to_text(lhs), to_text(rhs));
        return false;
    }

    bool polys(const std::string& key, const SparsePolynomial& lhs, const SparsePolynomial& rhs) {
        ++report_.checked;
        if (lhs == rhs) return true;
        // First monomial (in term order) where the coefficients differ.
        std::map<Monomial, std::pair<Integer, Integer>> diff;
        for (const auto& [m, c] : lhs.terms()) diff[m].first = c;
        for (const auto& [m, c] : rhs.terms()) diff[m].second = c;
        for (const auto& [m, cc] : diff)
            if (cc.first != cc.second) {
                fail(key + " coefficient of " + monomial_text(m, *lhs.alphabet()), to_text(cc.first),
                     to_text(cc.second));
                break;
            }
        return false;
    }

private:
    void fail(const std::string& key, std::string lhs, std::string rhs) {
        report_.status = VerificationStatus::Fail;
        if (!report_.counterexample) report_.counterexample = Counterexample{key, std::move(lhs), std::move(rhs)};
    }

    VerificationReport& report_;
};

std::string ijk(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) {
    return "I=" + i.to_string() + " J=" + j.to_string() + " K=" + k.to_string();
}
std::string ij(const IndexSubset& i, const IndexSubset& j) { return "I=" + i.to_string() + " J=" + j.to_string(); }

Integer coefficient_or_zero(const QuasiExpansion& e, const IndexSubset& s) {
    const auto it = e.find(s);
    return it == e.end() ? Integer(0) : it->second;
}
Integer coefficient_or_zero(const QuasiExpansion2& e, const IndexSubset& i, const IndexSubset& j) {
    const auto it = e.find({i, j});
    return it == e.end() ? Integer(0) : it->second;
}

std::vector<IndexSubset> subsets_a(int n) { return IndexSubset::all(n, SubsetVariant::TypeA); }
std::vector<IndexSubset> subsets_b(int n) { return IndexSubset::all(n, SubsetVariant::TypeB); }

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Sum over shapes of d_{lambda I} d_{f(lambda) J}, for every (I, J).
std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> paired_sums(
    const DTable& d, const std::function<Partition(const Partition&)>& partner) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> out;
    for (const auto& [shape, row] : d) {
        const auto it = d.find(partner(shape));
        if (it == d.end()) continue;
        for (const auto& [i, vi] : row)
            for (const auto& [j, vj] : it->second) out[{i.mask(), j.mask()}] += vi * vj;
    }
    return out;
}

std::int64_t lookup(const std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t>& m, std::uint32_t i,
                    std::uint32_t j) {
    const auto it = m.find({i, j});
    return it == m.end() ? 0 : it->second;
}

// Triple tableau sums sum g(l,m,n) d_{lI} d_{mJ} d_{nK}, as a dense table.
ConstantTable kronecker_weighted_triples(int n, SubsetVariant variant, const KroneckerTable& g, const DTable& d) {
    ConstantTable out(n, variant, variant == SubsetVariant::TypeA ? Flavor::ATriple : Flavor::CTriple);
    for (const auto& [key, coeff] : g) {
        if (coeff == 0) continue;
        const auto& [l, m, k] = key;
        const auto dl = d.find(l), dm = d.find(m), dk = d.find(k);
        if (dl == d.end() || dm == d.end() || dk == d.end()) continue;
        for (const auto& [i, vi] : dl->second)
            for (const auto& [j, vj] : dm->second)
                for (const auto& [kk, vk] : dk->second) out.at(i.mask(), j.mask(), kk.mask()) += coeff * vi * vj * vk;
    }
    return out;
}

// ---- type A -------------------------------------------------------------

void run_ab_inversion(int n, Checker& c) {
    const auto a = a_constants(n);
    const auto cumulative = cumulative_a(a);
    const auto direct = b_constants_direct(n);
    const auto inverted = b_constants(a);
    const auto subs = subsets_a(n);
    const std::uint32_t full = IndexSubset::full(n, SubsetVariant::TypeA).mask();
    for (const auto& i : subs)
        for (const auto& j : subs)
            for (const auto& k : subs) {
                std::int64_t rhs = 0;
                const std::uint32_t free = full & ~k.mask();
                for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
                    rhs += direct.at(i.mask(), j.mask(), k.mask() | extra);
                    if (extra == 0) break;
                }
                c.equal("sum a vs sum b at " + ijk(i, j, k), cumulative(i, j, k), rhs);
                c.equal("b by inversion vs direct at " + ijk(i, j, k), inverted(i, j, k), direct(i, j, k));
            }
}

void run_carter(int n, Checker& c) {
    const auto a = a_constants(n);
    const auto sums = paired_sums(d_table(n), [](const Partition& p) { return p; });
    const auto empty = IndexSubset(n, {});
    for (const auto& i : subsets_a(n))
        for (const auto& j : subsets_a(n))
            c.equal("a^{} at " + ij(i, j), a(i, j, empty), lookup(sums, i.mask(), j.mask()));
}

void run_carter_conjugate(int n, Checker& c) {
    const auto a = a_constants(n);
    const auto sums = paired_sums(d_table(n), [](const Partition& p) { return p.transpose(); });
    const auto full = IndexSubset::full(n, SubsetVariant::TypeA);
    for (const auto& i : subsets_a(n))
        for (const auto& j : subsets_a(n))
            c.equal("a^[n-1] at " + ij(i, j), a(i, j, full), lookup(sums, i.mask(), j.mask()));
}

void run_f_in_m(int n, Checker& c) {
    const auto x = Alphabet::type_a(n);
    const auto comps = enumerate_compositions(n);
    for (const auto& alpha : comps) {
        SparsePolynomial rhs(x);
        for (const auto& beta : comps)
            if (set_of_comp(alpha).subset_of(set_of_comp(beta))) rhs += eval_M(beta, x);
        c.polys("F" + alpha.to_string(), eval_F(alpha, x), rhs);
    }
}

void run_schur_in_f(int n, Checker& c) {
    const auto x = Alphabet::type_a(n);
    const auto d = d_table(n);
    for (const auto& lambda : enumerate_partitions(n)) {
        const auto s = eval_s(lambda, x);
        SparsePolynomial rhs(x);
        for (const auto& alpha : enumerate_compositions(n))
            rhs += eval_F(alpha, x) * big(d_entry(d, lambda, set_of_comp(alpha)));
        c.polys("s" + lambda.to_string(), s, rhs);
        const auto e = expand_in_F(s, n);
        for (const auto& i : subsets_a(n))
            c.equal("F-coefficient of s" + lambda.to_string() + " at I=" + i.to_string(), coefficient_or_zero(e, i),
                    big(d_entry(d, lambda, i)));
    }
}

void run_schur_in_m(int n, Checker& c) {
    const auto x = Alphabet::type_a(n);
    for (const auto& lambda : enumerate_partitions(n)) {
        const auto s = eval_s(lambda, x);
        SparsePolynomial rhs(x);
        for (const auto& alpha : enumerate_compositions(n)) rhs += eval_M(alpha, x) * big(kostka(lambda, alpha));
        c.polys("s" + lambda.to_string(), s, rhs);
        const auto e = expand_in_M(s, n);
        for (const auto& alpha : enumerate_compositions(n))
            c.equal("M-coefficient of s" + lambda.to_string() + " at " + alpha.to_string(),
                    coefficient_or_zero(e, set_of_comp(alpha)), big(kostka(lambda, alpha)));
    }
}

int gessel_alphabet(int n) { return std::max(n, 4); }

void run_gessel(int n, Checker& c) {
    const auto a = a_constants(n);
    const int size = gessel_alphabet(n);
    const auto x = Alphabet::type_a(size, "x"), y = Alphabet::type_a(size, "y");
    const auto xy = Alphabet::product(x, y);
    const auto u = Alphabet::juxtapose({x, y});
    for (const auto& k : subsets_a(n)) {
        const auto poly = collapse_product(eval_F(k, xy), u);
        const auto e = expand_in_F2(poly, n);
        c.polys("residual of F_K(XY) at K=" + k.to_string(), combine_F2(e, u), poly);
        for (const auto& i : subsets_a(n))
            for (const auto& j : subsets_a(n))
                c.equal("[F_I(X)F_J(Y)] F_K(XY) at " + ijk(i, j, k), coefficient_or_zero(e, i, j), big(a(i, j, k)));
    }
}

void run_matrix_count(int n, Checker& c) {
    const auto a = a_constants(n);
    const auto b = b_constants(a);
    const auto gr = gr_matrix_table(n);
    const auto subs = subsets_a(n);
    std::optional<ConstantTable> direct;
    if (n <= 5) direct = b_constants_direct(n);
    for (const auto& i : subs)
        for (const auto& j : subs)
            for (const auto& k : subs) {
                c.equal("b vs matrix count at " + ijk(i, j, k), b(i, j, k), gr(i, j, k));
                if (direct) c.equal("b vs direct B-class product at " + ijk(i, j, k), b(i, j, k), (*direct)(i, j, k));
            }
    const auto cumulative = cumulative_a(a);
    const auto empty = IndexSubset(n, {});
    const auto shapes = enumerate_partitions(n);
    for (const auto& i : subs)
        for (const auto& j : subs) {
            const auto r = comp_of_set(i), col = comp_of_set(j);
            const auto m = m_matrix(r, col);
            std::int64_t kk = 0;
            for (const auto& l : shapes) kk += kostka(l, r) * kostka(l, col);
            c.equal("A^{} vs m_{r,c} at " + ij(i, j), cumulative(i, j, empty), m);
            c.equal("m_{r,c} vs sum K K at r=" + r.to_string() + " c=" + col.to_string(), m, kk);
        }
}

void run_triple_a(int n, Checker& c) {
    const auto t = triple_a_table(n);
    const auto rhs = kronecker_weighted_triples(n, SubsetVariant::TypeA, kronecker_table(symmetric_character_table(n)),
                                                d_table(n));
    const auto subs = subsets_a(n);
    for (const auto& i : subs)
        for (const auto& j : subs)
            for (const auto& k : subs) c.equal("a^{}_{I,J,K} at " + ijk(i, j, k), t(i, j, k), rhs(i, j, k));
}

void run_array_count(int n, Checker& c) {
    const auto shapes = enumerate_partitions(n);
    const auto comps = enumerate_compositions(n);
    const auto g = kronecker_table(symmetric_character_table(n));
    std::map<std::pair<Partition, Composition>, std::int64_t> k;
    for (const auto& l : shapes)
        for (const auto& a : comps) k[{l, a}] = kostka(l, a);
    for (const auto& p : comps)
        for (const auto& q : comps)
            for (const auto& r : comps) {
                std::int64_t rhs = 0;
                for (const auto& [key, coeff] : g) {
                    if (coeff == 0) continue;
                    const auto& [l, m, nu] = key;
                    rhs += coeff * k.at({l, p}) * k.at({m, q}) * k.at({nu, r});
                }
                c.equal("m_{p,q,r} at p=" + p.to_string() + " q=" + q.to_string() + " r=" + r.to_string(),
                        m_3d(p, q, r), rhs);
            }
}

// ---- type B -------------------------------------------------------------

int type_b_alphabet(int n) { return std::max(n, 3); }

void run_carter_b(int n, Checker& c) {
    const auto cc = c_constants(n);
    const auto sums = paired_sums(dB_table(n), [](const Partition& p) { return p; });
    const auto empty = IndexSubset(n, {}, SubsetVariant::TypeB);
    for (const auto& i : subsets_b(n))
        for (const auto& j : subsets_b(n))
            c.equal("c^{} at " + ij(i, j), cc(i, j, empty), lookup(sums, i.mask(), j.mask()));
}

void run_chow(int n, Checker& c) {
    const auto cc = c_constants(n);
    const int size = type_b_alphabet(n);
    const auto x = Alphabet::type_b(size, "x"), y = Alphabet::type_b(size, "y");
    const auto xy = Alphabet::product(x, y);
    const auto u = Alphabet::juxtapose({x, y});
    for (const auto& k : subsets_b(n)) {
        const auto poly = collapse_product(eval_FB(k, xy), u);
        const auto e = expand_in_F2(poly, n);
        c.polys("residual of F^B_K(XY) at K=" + k.to_string(), combine_F2(e, u), poly);
        for (const auto& i : subsets_b(n))
            for (const auto& j : subsets_b(n))
                c.equal("[F^B_I(X)F^B_J(Y)] F^B_K(XY) at " + ijk(i, j, k), coefficient_or_zero(e, i, j),
                        big(cc(i, j, k)));
    }
}

// mu_0 = 0 when the top-left domino is vertical, and set(T0) \ {0} inside set(mu-bar).
bool standardization_admissible(const DominoTableau& t0, const std::vector<int>& weight) {
    if (t0.top_left_vertical() && weight[0] != 0) return false;
    std::vector<int> bar;
    for (int w : weight)
        if (w) bar.push_back(w);
    const auto allowed = set_of_comp(Composition(bar));
    for (int e : t0.descent_set().elements())
        if (e != 0 && !allowed.contains(e)) return false;
    return true;
}

void for_each_weak_composition(int n, int parts, std::vector<int>& acc,
                               const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(acc.size()) == parts - 1) {
        acc.push_back(n);
        visit(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= n; ++v) {
        acc.push_back(v);
        for_each_weak_composition(n - v, parts, acc, visit);
        acc.pop_back();
    }
}

constexpr int kStandardizationMaxLabel = 3;

void run_standardization(int n, Checker& c) {
    for (const auto& shape : enumerate_P0(n)) {
        std::map<std::pair<std::vector<int>, TableauRows>, std::int64_t> classes;
        for (const auto& t : enumerate_SSDT(shape, kStandardizationMaxLabel)) {
            const auto st = standardize(t);
            const auto grid = t.label_grid();
            std::ostringstream key;
            key << "set(T^st) in S(T) for " << shape.to_string() << " labels";
            for (const auto& row : grid)
                for (int v : row) key << ' ' << v;
            c.equal(key.str(), st.descent_set().subset_of(S_of(t)), true);
            ++classes[{t.weight(), st.label_grid()}];
        }
        for (const auto& t0 : enumerate_SDT(shape)) {
            std::vector<int> acc;
            for_each_weak_composition(n, kStandardizationMaxLabel + 1, acc, [&](const std::vector<int>& w) {
                auto trimmed = w;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                const std::int64_t expected = standardization_admissible(t0, w) ? 1 : 0;
                const auto it = classes.find({trimmed, t0.label_grid()});
                const std::int64_t found = it == classes.end() ? 0 : it->second;
                std::string key = "semistandard tableaux over a standard one of shape " + shape.to_string() +
                                  " descents " + t0.descent_set().to_string() + " weight " +
                                  Composition(w, true).to_string();
                c.equal(key, found, expected);
                c.equal("destandardize " + key, static_cast<std::int64_t>(destandardize(t0, w).has_value()), expected);
            });
        }
    }
}

void run_domino_in_fb(int n, Checker& c) {
    const auto x = Alphabet::type_b(type_b_alphabet(n));
    const auto d = dB_table(n);
    for (const auto& lambda : enumerate_P0(n)) {
        const auto g = eval_G(lambda, x);
        SparsePolynomial rhs(x);
        for (const auto& i : subsets_b(n)) rhs += eval_FB(i, x) * big(d_entry(d, lambda, i));
        c.polys("G" + lambda.to_string(), g, rhs);
        const auto e = expand_in_FB(g, n);
        for (const auto& i : subsets_b(n))
            c.equal("F^B-coefficient of G" + lambda.to_string() + " at I=" + i.to_string(), coefficient_or_zero(e, i),
                    big(d_entry(d, lambda, i)));
    }
}

void run_domino_schur(int n, Checker& c) {
    const auto x = Alphabet::type_b(type_b_alphabet(n));
    for (const auto& lambda : enumerate_P0(n)) {
        const auto q = two_quotient(lambda);
        c.polys("G" + lambda.to_string(), eval_G(lambda, x), eval_s_minus(q.minus, x) * eval_s_plus(q.plus, x));
    }
}

struct ProductSetup {
    AlphabetPtr x, y, xy, u;
};

ProductSetup type_b_product(int n) {
    const int size = type_b_alphabet(n);
    ProductSetup s;
    s.x = Alphabet::type_b(size, "x");
    s.y = Alphabet::type_b(size, "y");
    s.xy = Alphabet::product(s.x, s.y);
    s.u = Alphabet::juxtapose({s.x, s.y});
    return s;
}

void run_domino_cauchy(int n, Checker& c) {
    const auto s = type_b_product(n);
    const auto lhs = collapse_product(eval_G(Partition({2 * n}), s.xy), s.u);
    SparsePolynomial rhs(s.u);
    for (const auto& lambda : enumerate_P0(n))
        rhs += embed(eval_G(lambda, s.x), s.u, 0) * embed(eval_G(lambda, s.y), s.u, 1);
    c.polys("G_(2n)(XY)", lhs, rhs);
}

void run_wreath_power_sum(int n, Checker& c) {
    const auto x = Alphabet::type_b(type_b_alphabet(n));
    const auto shapes = enumerate_P0(n);
    for (const auto& mu : shapes) {
        const auto q = two_quotient(mu);
        SparsePolynomial x0(x);
        x0.add_term(Monomial(std::vector<Monomial::Entry>{{0u, static_cast<std::uint32_t>(q.minus.size())}}), 1);
        if (q.minus.size() == 0) x0 = SparsePolynomial(x, {{Monomial(), Integer(1)}});
        const auto lhs = eval_p_signed(q.plus, x) * x0;
        SparsePolynomial rhs(x);
        for (const auto& lambda : shapes) rhs += eval_G(lambda, x) * big(psi_B(lambda, mu));
        c.polys("class " + q.to_string(), lhs, rhs);
    }
}

void run_domino_kronecker(int n, Checker& c) {
    const auto s = type_b_product(n);
    const auto shapes = enumerate_P0(n);
    const auto g = kronecker_table(hyperoctahedral_character_table(n));
    const auto lifted = kronecker_gB_via_polynomials(n);
    for (const auto& [key, v] : g) {
        const auto& [l, m, k] = key;
        c.equal("g^B class sum vs coproduct at " + l.to_string() + "," + m.to_string() + "," + k.to_string(), v,
                lifted.at(key));
    }
    std::map<Partition, SparsePolynomial> gx, gy;
    for (const auto& l : shapes) {
        gx.emplace(l, embed(eval_G(l, s.x), s.u, 0));
        gy.emplace(l, embed(eval_G(l, s.y), s.u, 1));
    }
    for (const auto& lambda : shapes) {
        const auto lhs = collapse_product(eval_G(lambda, s.xy), s.u);
        SparsePolynomial rhs(s.u);
        for (const auto& mu : shapes)
            for (const auto& nu : shapes) {
                const auto coeff = g.at({lambda, mu, nu});
                if (coeff != 0) rhs += gx.at(mu) * gy.at(nu) * big(coeff);
            }
        c.polys("G" + lambda.to_string() + "(XY)", lhs, rhs);
    }
}

void run_triple_c(int n, Checker& c) {
    const auto t = triple_c_table(n);
    const auto d = dB_table(n);
    const auto class_sum = kronecker_table(hyperoctahedral_character_table(n));
    const auto lifted = kronecker_gB_via_polynomials(n);
    const auto rhs_class = kronecker_weighted_triples(n, SubsetVariant::TypeB, class_sum, d);
    const auto rhs_lifted = kronecker_weighted_triples(n, SubsetVariant::TypeB, lifted, d);
    const auto subs = subsets_b(n);
    for (const auto& i : subs)
        for (const auto& j : subs)
            for (const auto& k : subs) {
                c.equal("c^{}_{I,J,K} vs class-sum g^B at " + ijk(i, j, k), t(i, j, k), rhs_class(i, j, k));
                c.equal("c^{}_{I,J,K} vs coproduct g^B at " + ijk(i, j, k), t(i, j, k), rhs_lifted(i, j, k));
            }
}

using Runner = void (*)(int, Checker&);

struct Entry {
    IdentityInfo info;
    Runner run;
};

int no_alphabet(int) { return 0; }
int same_as_n(int n) { return n; }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"ab-inversion", "cumulative a constants equal superset sums of b constants", 1, 4, 5, no_alphabet}, run_ab_inversion},
        {{"carter", "a^{}_{IJ} = sum_lambda d_{lambda I} d_{lambda J}", 1, 6, 7, no_alphabet}, run_carter},
        {{"f-in-m", "F_alpha = sum of M_beta over set(beta) containing set(alpha)", 1, 5, 6, same_as_n}, run_f_in_m},
        {{"schur-in-f", "s_lambda = sum_alpha d_{lambda set(alpha)} F_alpha", 1, 5, 6, same_as_n}, run_schur_in_f},
        {{"schur-in-m", "s_lambda = sum_alpha K_{lambda alpha} M_alpha", 1, 5, 6, same_as_n}, run_schur_in_m},
        {{"gessel", "F_K(XY) = sum a^K_{IJ} F_I(X) F_J(Y)", 1, 4, 5, gessel_alphabet}, run_gessel},
        {{"carter-conjugate", "a^{[n-1]}_{IJ} = sum_lambda d_{lambda I} d_{lambda' J}", 1, 6, 7, no_alphabet}, run_carter_conjugate},
        {{"matrix-count", "b constants = matrix counts; A^{}_{IJ} = m_{r,c} = sum K K", 1, 5, 6, no_alphabet}, run_matrix_count},
        {{"triple-a", "a^{}_{I,J,K} = sum g d d d", 1, 5, 6, no_alphabet}, run_triple_a},
        {{"array-count", "m_{p,q,r} = sum g K K K", 1, 4, 5, no_alphabet}, run_array_count},
        {{"carter-b", "c^{}_{IJ} = sum_lambda d^B_{lambda I} d^B_{lambda J}", 1, 4, 5, no_alphabet}, run_carter_b},
        {{"chow", "F^B_K(XY) = sum c^K_{IJ} F^B_I(X) F^B_J(Y)", 1, 3, 4, type_b_alphabet}, run_chow},
        {{"standardization", "standardization of semistandard domino tableaux, both directions", 1, 3, 4, no_alphabet},
         run_standardization},
        {{"domino-in-fb", "G_lambda = sum_I d^B_{lambda I} F^B_I", 1, 3, 4, type_b_alphabet}, run_domino_in_fb},
        {{"domino-schur", "G_lambda(X) = s_{lambda-}(X^-) s_{lambda+}(X^+)", 1, 3, 4, type_b_alphabet}, run_domino_schur},
        {{"domino-cauchy", "G_(2n)(XY) = sum_lambda G_lambda(X) G_lambda(Y)", 1, 3, 4, type_b_alphabet}, run_domino_cauchy},
        {{"wreath-power-sum", "p_{mu+}(X) x_0^{|mu-|} = sum_lambda psi^lambda_mu G_lambda(X)", 1, 3, 4, type_b_alphabet},
         run_wreath_power_sum},
        {{"domino-kronecker", "G_lambda(XY) = sum g^B G_mu(X) G_nu(Y); class-sum g^B = coproduct g^B", 1, 3, 4,
          type_b_alphabet},
         run_domino_kronecker},
        {{"triple-c", "c^{}_{I,J,K} = sum g^B d^B d^B d^B, both g^B routes", 1, 3, 4, no_alphabet},
         run_triple_c},
    };
    return table;
}

const Entry& find_entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw usage_error("unknown identity '" + id + "'");
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const IdentityInfo& find_identity(const std::string& id) { return find_entry(id).info; }

VerificationReport verify_identity(const std::string& id, int n) {
    const auto& entry = find_entry(id);
    if (n < entry.info.min_n || n > entry.info.max_n)
        throw usage_error("n=" + std::to_string(n) + " is outside [" + std::to_string(entry.info.min_n) + ", " +
                          std::to_string(entry.info.max_n) + "] for " + id);
    VerificationReport report;
    report.identity = id;
    report.n = n;
    report.alphabet_size = entry.info.alphabet_size(n);
    const auto start = std::chrono::steady_clock::now();
    try {
        Checker checker(report);
        entry.run(n, checker);
    } catch (const std::exception& e) {
        report.status = VerificationStatus::Error;
        report.error = e.what();
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> verify_many(const std::vector<std::pair<std::string, int>>& requests,
                                            unsigned workers) {
    struct Task {
        std::string id;
        int n;
        std::string problem;  // non-empty: report an error instead of running
    };
    std::vector<Task> tasks;
    for (const auto& [id, max_n] : requests) {
        const IdentityInfo* info = nullptr;
        for (const auto& i : identity_registry())
            if (i.id == id) info = &i;
        if (!info) {
            tasks.push_back({id, max_n, "unknown identity '" + id + "'"});
            continue;
        }
        if (max_n > info->max_n || max_n < info->min_n) {
            tasks.push_back({id, max_n,
                             "n=" + std::to_string(max_n) + " is outside [" + std::to_string(info->min_n) + ", " +
                                 std::to_string(info->max_n) + "] for " + id});
            continue;
        }
        for (int n = info->min_n; n <= max_n; ++n) tasks.push_back({id, n, {}});
    }

    std::vector<VerificationReport> out(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            if (!tasks[t].problem.empty()) {
                out[t].identity = tasks[t].id;
                out[t].n = tasks[t].n;
                out[t].status = VerificationStatus::Error;
                out[t].error = tasks[t].problem;
            } else {
                out[t] = verify_identity(tasks[t].id, tasks[t].n);
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < count; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace descent
