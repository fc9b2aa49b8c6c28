#include "descent/constant_table.hpp"

namespace descent {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::A: return "a";
        case Flavor::B: return "b";
        case Flavor::C: return "c";
        case Flavor::ATriple: return "a3";
        case Flavor::CTriple: return "c3";
    }
    return "?";
}

ConstantTable::ConstantTable(int n, SubsetVariant variant, Flavor flavor)
    : n_(n), variant_(variant), flavor_(flavor), count_(IndexSubset::count(n, variant)) {
    if (n < 1) throw invalid_argument("structure constants require n >= 1");
    values_.assign(static_cast<std::size_t>(count_) * count_ * count_, 0);
}

std::int64_t ConstantTable::operator()(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) const {
    for (const auto* s : {&i, &j, &k})
        if (s->rank() != n_ || s->variant() != variant_) throw invalid_argument("subset does not match the table");
    return at(i.mask(), j.mask(), k.mask());
}

}  // namespace descent
