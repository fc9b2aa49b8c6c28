#include "descent/descent_b.hpp"

#include "descent/bases.hpp"
#include "group_convolution.hpp"

namespace descent {

IndexSubset b_descent_set(const SignedPermutation& pi) { return pi.b_descent_set(); }

ConstantTable c_constants(int n) {
    return detail::class_convolution(detail::GroupData::hyperoctahedral(n), Flavor::C);
}

std::int64_t triple_c_empty(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) {
    if (i.rank() != j.rank() || j.rank() != k.rank()) throw invalid_argument("triple_c_empty: rank mismatch");
    for (const auto* s : {&i, &j, &k})
        if (s->variant() != SubsetVariant::TypeB) throw invalid_argument("triple_c_empty expects type B subsets");
    const auto g = detail::GroupData::hyperoctahedral(i.rank());
    return detail::identity_triple_count(g, i.mask(), j.mask(), k.mask());
}

ConstantTable triple_c_table(int n) {
    return detail::identity_triples(detail::GroupData::hyperoctahedral(n), Flavor::CTriple);
}

KroneckerTable kronecker_gB_via_polynomials(int n) {
    if (n < 1) throw invalid_argument("kronecker_gB_via_polynomials requires n >= 1");
    const int size = n;
    const auto am = Alphabet::type_a(size, "a-"), ap = Alphabet::type_a(size, "a+");
    const auto bm = Alphabet::type_a(size, "b-"), bp = Alphabet::type_a(size, "b+");
    const auto u = Alphabet::juxtapose({am, ap, bm, bp});
    const std::uint32_t off_am = u->block_offset(0), off_ap = u->block_offset(1);
    const std::uint32_t off_bm = u->block_offset(2), off_bp = u->block_offset(3);

    // (AB)^+ = A^+B^+ u A^-B^-, (AB)^- = A^+B^- u A^-B^+; each variable of these
    // alphabets is the product of one A and one B variable.
    const auto pair_images = [&](std::uint32_t a_first, std::uint32_t b_first, std::uint32_t a_second,
                                 std::uint32_t b_second) {
        std::vector<Monomial> images;
        for (auto [a_off, b_off] : {std::pair{a_first, b_first}, std::pair{a_second, b_second}})
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    images.push_back(Monomial::from_word({a_off + static_cast<std::uint32_t>(i),
                                                          b_off + static_cast<std::uint32_t>(j)}));
        return images;
    };
    const auto plus_images = pair_images(off_ap, off_bp, off_am, off_bm);
    const auto minus_images = pair_images(off_ap, off_bm, off_am, off_bp);
    const auto z = Alphabet::type_a(2 * size * size, "z");

    const auto shapes = enumerate_P0(n);
    KroneckerTable out;
    for (const auto& lambda : shapes) {
        const auto q = two_quotient(lambda);
        const auto lhs = substitute_variables(eval_s(q.minus, z), u, minus_images) *
                         substitute_variables(eval_s(q.plus, z), u, plus_images);
        std::map<std::pair<Partition, Partition>, Integer> found;
        for (const auto& [blocks, c] : expand_in_schur_blocks(lhs)) {
            const auto mu = from_two_quotient(BiPartition{blocks[0], blocks[1]});
            const auto nu = from_two_quotient(BiPartition{blocks[2], blocks[3]});
            found[{mu, nu}] = c;
        }
        for (const auto& mu : shapes)
            for (const auto& nu : shapes) {
                const auto it = found.find({mu, nu});
                out[{lambda, mu, nu}] = it == found.end() ? 0 : it->second.get_si();
            }
    }
    return out;
}

}  // namespace descent
