#include "descent/bases.hpp"

#include <functional>

#include "descent/domino.hpp"
#include "descent/tableaux.hpp"

namespace descent {

namespace {

void require_kind(const AlphabetPtr& x, AlphabetKind kind, const char* what) {
    if (x->kind() != kind)
        throw invalid_argument(std::string(what) + ": alphabet has the wrong kind");
}

bool is_type_b(const IndexSubset& s) { return s.variant() == SubsetVariant::TypeB; }

// Weakly increasing index words w_1..w_n over [0, v) such that, at each
// transition j (between w_j and w_{j+1}; type B includes j = 0 with w_0 = 0),
// j in S forces a strict increase. With `monomial_basis`, j not in S forces equality.
void for_each_word(std::uint32_t v, const IndexSubset& s, bool monomial_basis,
                   const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    const int n = s.rank();
    const bool type_b = is_type_b(s);
    std::vector<std::uint32_t> word(n);
    std::function<void(int, std::uint32_t)> rec = [&](int k, std::uint32_t prev) {
        if (k == n) {
            visit(word);
            return;
        }
        const bool free_start = k == 0 && !type_b;
        const bool strict = !free_start && s.contains(k);
        const std::uint32_t lo = free_start ? 0 : prev + (strict ? 1 : 0);
        const std::uint32_t hi = (monomial_basis && !free_start && !strict) ? std::min(prev + 1, v) : v;
        for (std::uint32_t x = lo; x < hi; ++x) {
            word[k] = x;
            rec(k + 1, x);
        }
    };
    rec(0, 0);
}

SparsePolynomial words_polynomial(const AlphabetPtr& x, const IndexSubset& s, bool monomial_basis) {
    SparsePolynomial::Terms terms;
    for_each_word(x->size(), s, monomial_basis, [&](const std::vector<std::uint32_t>& w) {
        auto [it, inserted] = terms.try_emplace(Monomial::from_word(w), 1);
        if (!inserted) it->second += 1;
    });
    return SparsePolynomial(x, std::move(terms));
}

SparsePolynomial schur_on_range(const Partition& lambda, const AlphabetPtr& x, int lo, int hi) {
    SparsePolynomial::Terms terms;
    std::vector<std::uint32_t> word;
    for_each_ssyt(lambda, lo, hi, [&](const TableauRows& rows) {
        word.clear();
        for (const auto& r : rows)
            for (int v : r) word.push_back(static_cast<std::uint32_t>(v));
        auto [it, inserted] = terms.try_emplace(Monomial::from_word(word), 1);
        if (!inserted) it->second += 1;
    });
    return SparsePolynomial(x, std::move(terms));
}

SparsePolynomial constant_one(const AlphabetPtr& x) {
    SparsePolynomial one(x);
    one.add_term(Monomial(), 1);
    return one;
}

// Lowest word of the class S: starts at 0 (type A) or at w_0 = 0 (type B) and
// steps up by one exactly at the transitions in S.
Monomial leading_monomial(const IndexSubset& s) {
    const int n = s.rank();
    std::vector<std::uint32_t> word(n);
    std::uint32_t cur = 0;
    for (int k = 0; k < n; ++k) {
        if ((k > 0 || is_type_b(s)) && s.contains(k)) ++cur;
        word[k] = cur;
    }
    return Monomial::from_word(word);
}

SubsetVariant variant_of(const AlphabetPtr& x) {
    switch (x->kind()) {
        case AlphabetKind::TypeA: return SubsetVariant::TypeA;
        case AlphabetKind::TypeB: return SubsetVariant::TypeB;
        default: throw invalid_argument("quasisymmetric expansion over a union alphabet");
    }
}

void check_expandable(const SparsePolynomial& poly, const AlphabetPtr& x, int n) {
    const std::uint32_t needed = x->kind() == AlphabetKind::TypeB ? n + 1 : n;
    if (x->size() < needed)
        throw expansion_error("alphabet with " + std::to_string(x->size()) + " variables too small for degree " +
                              std::to_string(n));
    const auto deg = poly.homogeneous_degree();
    if (!poly.is_zero() && (!deg || *deg != static_cast<std::uint32_t>(n)))
        throw expansion_error("polynomial is not homogeneous of degree " + std::to_string(n));
}

std::string first_term(const SparsePolynomial& residual) {
    const auto& [m, c] = *residual.terms().begin();
    SparsePolynomial single(residual.alphabet());
    single.add_term(m, c);
    auto s = single.dump();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

int sign_of_difference(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b) % 2 ? -1 : 1; }

QuasiExpansion moebius_down(const QuasiExpansion& m, int n, SubsetVariant variant) {
    QuasiExpansion f;
    for (const auto& s : IndexSubset::all(n, variant)) {
        Integer acc = 0;
        // Submasks of s.mask(), including 0.
        for (std::uint32_t t = s.mask();; t = (t - 1) & s.mask()) {
            auto it = m.find(IndexSubset::from_mask(n, t, variant));
            if (it != m.end()) acc += sign_of_difference(s.mask(), t) * it->second;
            if (t == 0) break;
        }
        if (acc != 0) f.emplace(s, acc);
    }
    return f;
}

SparsePolynomial eval_F_any(const IndexSubset& s, const AlphabetPtr& x) {
    return s.variant() == SubsetVariant::TypeA ? eval_F(s, x) : eval_FB(s, x);
}

}  // namespace

// ---------------------------------------------------------------------------
// Evaluators

SparsePolynomial eval_M(const Composition& alpha, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeA, "eval_M");
    return words_polynomial(x, set_of_comp(alpha), true);
}

SparsePolynomial eval_F(const Composition& alpha, const AlphabetPtr& x) { return eval_F(set_of_comp(alpha), x); }

SparsePolynomial eval_F(const IndexSubset& subset, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeA, "eval_F");
    if (is_type_b(subset)) throw invalid_argument("eval_F requires a type A subset");
    return words_polynomial(x, subset, false);
}

SparsePolynomial eval_s(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeA, "eval_s");
    return schur_on_range(lambda, x, 0, static_cast<int>(x->size()) - 1);
}

SparsePolynomial eval_p(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeA, "eval_p");
    SparsePolynomial out = constant_one(x);
    for (int part : lambda.parts()) {
        SparsePolynomial pk(x);
        for (std::uint32_t v = 0; v < x->size(); ++v) pk.add_term(Monomial({{v, static_cast<std::uint32_t>(part)}}), 1);
        out = out * pk;
    }
    return out;
}

SparsePolynomial eval_FB(const IndexSubset& subset, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_FB");
    if (!is_type_b(subset)) throw invalid_argument("eval_FB requires a type B subset");
    return words_polynomial(x, subset, false);
}

SparsePolynomial eval_MB(const IndexSubset& subset, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_MB");
    if (!is_type_b(subset)) throw invalid_argument("eval_MB requires a type B subset");
    return words_polynomial(x, subset, true);
}

SparsePolynomial eval_s_minus(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_s_minus");
    return schur_on_range(lambda, x, 1, static_cast<int>(x->size()) - 1);
}

SparsePolynomial eval_s_plus(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_s_plus");
    return schur_on_range(lambda, x, 0, static_cast<int>(x->size()) - 1);
}

SparsePolynomial eval_p_signed(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_p_signed");
    SparsePolynomial out = constant_one(x);
    for (int part : lambda.parts()) {
        SparsePolynomial pk(x);
        for (std::uint32_t v = 0; v < x->size(); ++v)
            pk.add_term(Monomial({{v, static_cast<std::uint32_t>(part)}}), v == 0 ? 1 : 2);
        out = out * pk;
    }
    return out;
}

SparsePolynomial eval_G(const Partition& lambda, const AlphabetPtr& x) {
    require_kind(x, AlphabetKind::TypeB, "eval_G");
    SparsePolynomial::Terms terms;
    std::vector<std::uint32_t> word;
    for_each_SSDT(lambda, static_cast<int>(x->size()) - 1,
                  [&](const std::vector<Domino>&, const std::vector<int>& labels) {
                      word.assign(labels.begin(), labels.end());
                      auto [it, inserted] = terms.try_emplace(Monomial::from_word(word), 1);
                      if (!inserted) it->second += 1;
                  });
    return SparsePolynomial(x, std::move(terms));
}

// ---------------------------------------------------------------------------
// Expansions

QuasiExpansion expand_in_M(const SparsePolynomial& poly, int n) {
    const auto& x = poly.alphabet();
    const auto variant = variant_of(x);
    check_expandable(poly, x, n);
    QuasiExpansion m;
    SparsePolynomial rebuilt(x);
    for (const auto& s : IndexSubset::all(n, variant)) {
        const Integer c = poly.coefficient(leading_monomial(s));
        if (c == 0) continue;
        m.emplace(s, c);
        rebuilt += words_polynomial(x, s, true) * c;
    }
    const auto residual = poly - rebuilt;
    if (!residual.is_zero()) throw expansion_error("not in the span of the monomial basis; residual term " + first_term(residual));
    return m;
}

QuasiExpansion expand_in_F(const SparsePolynomial& poly, int n) {
    const auto& x = poly.alphabet();
    const auto variant = variant_of(x);
    check_expandable(poly, x, n);
    QuasiExpansion m;
    for (const auto& s : IndexSubset::all(n, variant)) {
        const Integer c = poly.coefficient(leading_monomial(s));
        if (c != 0) m.emplace(s, c);
    }
    auto f = moebius_down(m, n, variant);
    const auto residual = poly - combine_F(f, x);
    if (!residual.is_zero())
        throw expansion_error("not in the span of the fundamental basis; residual term " + first_term(residual));
    return f;
}

QuasiExpansion expand_in_FB(const SparsePolynomial& poly, int n) {
    require_kind(poly.alphabet(), AlphabetKind::TypeB, "expand_in_FB");
    return expand_in_F(poly, n);
}

std::map<Composition, Integer> expand_in_F_compositions(const SparsePolynomial& poly, int n) {
    std::map<Composition, Integer> out;
    for (const auto& [s, c] : expand_in_F(poly, n)) out.emplace(comp_of_set(s), c);
    return out;
}

SparsePolynomial combine_F(const QuasiExpansion& coeffs, const AlphabetPtr& x) {
    SparsePolynomial out(x);
    for (const auto& [s, c] : coeffs) out += eval_F_any(s, x) * c;
    return out;
}

QuasiExpansion2 expand_in_F2(const SparsePolynomial& poly, int n) {
    const auto& u = poly.alphabet();
    if (u->kind() != AlphabetKind::Union || u->blocks().size() != 2)
        throw invalid_argument("expand_in_F2 expects a polynomial over a juxtaposition of two alphabets");
    const auto& x = u->blocks()[0];
    const auto& y = u->blocks()[1];
    const auto variant = variant_of(x);
    if (variant_of(y) != variant) throw invalid_argument("expand_in_F2: blocks of different kinds");
    const std::uint32_t needed = variant == SubsetVariant::TypeB ? n + 1 : n;
    if (x->size() < needed || y->size() < needed) throw expansion_error("alphabet too small for the double expansion");

    const auto subsets = IndexSubset::all(n, variant);
    const auto offset = u->block_offset(1);
    // M x M coefficients from leading monomials, then Moebius inversion in each factor.
    std::map<std::pair<IndexSubset, IndexSubset>, Integer> m;
    for (const auto& s : subsets)
        for (const auto& t : subsets) {
            const Integer c = poly.coefficient(leading_monomial(s) * leading_monomial(t).shifted(offset));
            if (c != 0) m.emplace(std::pair{s, t}, c);
        }
    QuasiExpansion2 f;
    for (const auto& s : subsets)
        for (const auto& t : subsets) {
            Integer acc = 0;
            for (std::uint32_t a = s.mask();; a = (a - 1) & s.mask()) {
                for (std::uint32_t b = t.mask();; b = (b - 1) & t.mask()) {
                    auto it = m.find({IndexSubset::from_mask(n, a, variant), IndexSubset::from_mask(n, b, variant)});
                    if (it != m.end())
                        acc += sign_of_difference(s.mask(), a) * sign_of_difference(t.mask(), b) * it->second;
                    if (b == 0) break;
                }
                if (a == 0) break;
            }
            if (acc != 0) f.emplace(std::pair{s, t}, acc);
        }
    const auto residual = poly - combine_F2(f, u);
    if (!residual.is_zero())
        throw expansion_error("not in the span of the product fundamental basis; residual term " + first_term(residual));
    return f;
}

SparsePolynomial combine_F2(const QuasiExpansion2& coeffs, const AlphabetPtr& union_xy) {
    const auto& x = union_xy->blocks().at(0);
    const auto& y = union_xy->blocks().at(1);
    std::map<IndexSubset, SparsePolynomial> fx, fy;
    auto cached = [&](std::map<IndexSubset, SparsePolynomial>& cache, const IndexSubset& s, const AlphabetPtr& a,
                      std::size_t block) -> const SparsePolynomial& {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, embed(eval_F_any(s, a), union_xy, block)).first;
        return it->second;
    };
    SparsePolynomial out(union_xy);
    for (const auto& [key, c] : coeffs) out += (cached(fx, key.first, x, 0) * cached(fy, key.second, y, 1)) * c;
    return out;
}

std::map<std::vector<Partition>, Integer> expand_in_schur_blocks(const SparsePolynomial& poly) {
    const auto& u = poly.alphabet();
    if (u->kind() != AlphabetKind::Union) throw invalid_argument("expand_in_schur_blocks expects a union alphabet");
    for (const auto& b : u->blocks()) require_kind(b, AlphabetKind::TypeA, "expand_in_schur_blocks");
    const std::size_t nblocks = u->blocks().size();

    std::map<std::vector<Partition>, Integer> out;
    SparsePolynomial rest = poly;
    while (!rest.is_zero()) {
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : rest.terms())
            if (!lead || lex_greater(m, *lead)) lead = &m;
        std::vector<Partition> shapes;
        for (std::size_t b = 0; b < nblocks; ++b) {
            const auto off = u->block_offset(b);
            std::vector<int> exps;
            for (std::uint32_t v = 0; v < u->blocks()[b]->size(); ++v)
                exps.push_back(static_cast<int>(lead->exponent(off + v)));
            while (!exps.empty() && exps.back() == 0) exps.pop_back();
            for (std::size_t i = 1; i < exps.size(); ++i)
                if (exps[i] > exps[i - 1] || exps[i] == 0)
                    throw expansion_error("leading monomial is not dominant; polynomial is not symmetric in each block");
            shapes.emplace_back(std::move(exps));
        }
        const Integer c = rest.coefficient(*lead);
        SparsePolynomial product = embed(constant_one(u->blocks()[0]), u, 0);
        for (std::size_t b = 0; b < nblocks; ++b) product = product * embed(eval_s(shapes[b], u->blocks()[b]), u, b);
        rest -= product * c;
        out[shapes] += c;
    }
    return out;
}

}  // namespace descent
