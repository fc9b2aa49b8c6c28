#include "descent/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace descent {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> merged;
    for (const auto& [v, e] : entries_) {
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    entries_ = std::move(merged);
}

Monomial Monomial::from_word(const std::vector<std::uint32_t>& word) {
    std::vector<Entry> e;
    e.reserve(word.size());
    for (auto v : word) e.emplace_back(v, 1);
    return Monomial(std::move(e));
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
    return it != entries_.end() && it->first == var ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::shifted(std::uint32_t offset) const {
    Monomial out = *this;
    for (auto& [v, e] : out.entries_) v += offset;
    return out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0;
    for (; i < ea.size() && i < eb.size(); ++i) {
        if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
        if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
    }
    return i < ea.size();
}

// ---------------------------------------------------------------------------
// Alphabet

AlphabetPtr Alphabet::type_a(int n, std::string name) {
    if (n < 0) throw invalid_argument("alphabet size must be non-negative");
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->kind_ = AlphabetKind::TypeA;
    for (int i = 1; i <= n; ++i) a->names_.push_back(name + std::to_string(i));
    return a;
}

AlphabetPtr Alphabet::type_b(int n, std::string name) {
    if (n < 0) throw invalid_argument("alphabet size must be non-negative");
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->kind_ = AlphabetKind::TypeB;
    for (int i = 0; i <= n; ++i) a->names_.push_back(name + std::to_string(i));
    return a;
}

std::uint32_t Alphabet::nonzero_size() const {
    if (kind_ != AlphabetKind::TypeB) throw invalid_argument("nonzero_size on a non type B alphabet");
    return size() - 1;
}

AlphabetPtr Alphabet::product(const AlphabetPtr& x, const AlphabetPtr& y) {
    if (x->kind() != y->kind() || x->kind() == AlphabetKind::Union)
        throw invalid_argument("product alphabet requires two alphabets of the same kind");
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->kind_ = x->kind();
    a->left_ = x;
    a->right_ = y;
    auto pair_name = [&](int i, int j) {
        auto label = [](const AlphabetPtr& f, int k) {
            if (f->kind() == AlphabetKind::TypeB && k < 0) return "-" + f->name(static_cast<std::uint32_t>(-k));
            return f->name(static_cast<std::uint32_t>(k));
        };
        return "(" + label(x, i) + "," + label(y, j) + ")";
    };
    if (x->kind() == AlphabetKind::TypeA) {
        for (std::uint32_t i = 0; i < x->size(); ++i)
            for (std::uint32_t j = 0; j < y->size(); ++j) {
                a->pairs_.emplace_back(static_cast<int>(i), static_cast<int>(j));
                a->names_.push_back(pair_name(static_cast<int>(i), static_cast<int>(j)));
            }
    } else {
        const int mx = static_cast<int>(x->nonzero_size());
        const int my = static_cast<int>(y->nonzero_size());
        for (int j = 0; j <= my; ++j) {
            a->pairs_.emplace_back(0, j);
            a->names_.push_back(pair_name(0, j));
        }
        for (int i = 1; i <= mx; ++i)
            for (int j = -my; j <= my; ++j) {
                a->pairs_.emplace_back(i, j);
                a->names_.push_back(pair_name(i, j));
            }
    }
    return a;
}

AlphabetPtr Alphabet::juxtapose(std::vector<AlphabetPtr> blocks) {
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->kind_ = AlphabetKind::Union;
    std::uint32_t offset = 0;
    for (const auto& b : blocks) {
        a->offsets_.push_back(offset);
        for (std::uint32_t v = 0; v < b->size(); ++v) a->names_.push_back(b->name(v));
        offset += b->size();
    }
    a->blocks_ = std::move(blocks);
    return a;
}

bool Alphabet::same_as(const Alphabet& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || names_ != other.names_ || pairs_ != other.pairs_) return false;
    if (blocks_.size() != other.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (!blocks_[i]->same_as(*other.blocks_[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// SparsePolynomial

SparsePolynomial::SparsePolynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

SparsePolynomial::SparsePolynomial(AlphabetPtr alphabet, Terms terms)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

Integer SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<std::uint32_t> SparsePolynomial::homogeneous_degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& [m, c] : terms_) {
        if (!d)
            d = m.degree();
        else if (*d != m.degree())
            return std::nullopt;
    }
    return d ? d : std::optional<std::uint32_t>(0);
}

void SparsePolynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::require_same_alphabet(const SparsePolynomial& other) const {
    if (!alphabet_->same_as(*other.alphabet_)) throw invalid_argument("polynomials live over different alphabets");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    require_same_alphabet(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    require_same_alphabet(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out += other;
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out -= other;
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    require_same_alphabet(other);
    SparsePolynomial out(alphabet_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const Integer& scalar) const {
    SparsePolynomial out(alphabet_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * scalar);
    return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
    return alphabet_->same_as(*other.alphabet_) && terms_ == other.terms_;
}

std::string SparsePolynomial::dump() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        os << c.get_str() << " *";
        if (m.entries().empty()) os << " 1";
        for (const auto& [v, e] : m.entries()) {
            os << ' ' << alphabet_->name(v);
            if (e != 1) os << '^' << e;
        }
        os << '\n';
    }
    return os.str();
}

SparsePolynomial embed(const SparsePolynomial& p, const AlphabetPtr& union_alphabet, std::size_t block) {
    if (union_alphabet->kind() != AlphabetKind::Union || block >= union_alphabet->blocks().size() ||
        !union_alphabet->blocks()[block]->same_as(*p.alphabet()))
        throw invalid_argument("embed: alphabet is not the requested block of the union");
    const auto offset = union_alphabet->block_offset(block);
    SparsePolynomial::Terms terms;
    for (const auto& [m, c] : p.terms()) terms.emplace(m.shifted(offset), c);
    return SparsePolynomial(union_alphabet, std::move(terms));
}

SparsePolynomial collapse_product(const SparsePolynomial& p, const AlphabetPtr& union_xy) {
    const auto& xy = p.alphabet();
    if (!xy->is_product() || union_xy->blocks().size() != 2 || !union_xy->blocks()[0]->same_as(*xy->left()) ||
        !union_xy->blocks()[1]->same_as(*xy->right()))
        throw invalid_argument("collapse_product: union alphabet must juxtapose the product's factors");
    const auto offset = union_xy->block_offset(1);
    SparsePolynomial out(union_xy);
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> e;
        for (const auto& [v, exp] : m.entries()) {
            const auto [i, j] = xy->factor_labels(v);
            e.emplace_back(static_cast<std::uint32_t>(std::abs(i)), exp);
            e.emplace_back(offset + static_cast<std::uint32_t>(std::abs(j)), exp);
        }
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

SparsePolynomial substitute_variables(const SparsePolynomial& p, const AlphabetPtr& target,
                                      const std::vector<Monomial>& images) {
    if (images.size() != p.alphabet()->size()) throw invalid_argument("substitute_variables: one image per variable");
    for (const auto& m : images)
        for (const auto& [v, e] : m.entries())
            if (v >= target->size()) throw invalid_argument("substitute_variables: image outside the target alphabet");
    SparsePolynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial image;
        for (const auto& [v, e] : m.entries())
            for (std::uint32_t k = 0; k < e; ++k) image = image * images[v];
        out.add_term(image, c);
    }
    return out;
}

}  // namespace descent
