#include "dybx/tensor.hpp"

#include "dybx/errors.hpp"
#include "dybx/linalg.hpp"

#include <sstream>

namespace dybx {

TensorElement::TensorElement(GroupPtr group, int order) : group_(std::move(group)), order_(order)
{
    if (order_ < 0)
        throw DomainError("negative tensor order");
    long total = 1;
    for (int i = 0; i < order_; ++i) {
        total *= group_->size();
        if (total > (1L << 40))
            throw DomainError("tensor order too large");
    }
}

TensorElement TensorElement::unit(GroupPtr group, int order)
{
    std::vector<int> e(order, group->identity());
    return basis(std::move(group), e);
}

TensorElement TensorElement::basis(GroupPtr group, const std::vector<int>& elems, const Cyclotomic& c)
{
    TensorElement t(std::move(group), static_cast<int>(elems.size()));
    t.add(elems, c);
    return t;
}

TensorElement::Key TensorElement::encode(const std::vector<int>& elems) const
{
    if (static_cast<int>(elems.size()) != order_)
        throw DomainError("tensor key has wrong length");
    Key k = 0;
    for (int g : elems) {
        if (g < 0 || g >= group_->size())
            throw DomainError("group element index out of range");
        k = k * group_->size() + g;
    }
    return k;
}

std::vector<int> TensorElement::decode(Key key) const
{
    std::vector<int> out(order_);
    for (int i = order_ - 1; i >= 0; --i) {
        out[i] = static_cast<int>(key % group_->size());
        key /= group_->size();
    }
    return out;
}

Cyclotomic TensorElement::coeff(const std::vector<int>& elems) const
{
    auto it = terms_.find(encode(elems));
    return it == terms_.end() ? Cyclotomic() : it->second;
}

void TensorElement::add(const std::vector<int>& elems, const Cyclotomic& c)
{
    addKey(encode(elems), c);
}

void TensorElement::addKey(Key key, const Cyclotomic& c)
{
    if (c.isZero())
        return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

bool TensorElement::isScalar() const
{
    if (terms_.empty())
        return true;
    std::vector<int> e(order_, group_->identity());
    return terms_.size() == 1 && terms_.begin()->first == encode(e);
}

void TensorElement::checkCompatible(const TensorElement& o) const
{
    if (order_ != o.order_)
        throw DomainError("tensor order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
    if (group_ != o.group_ && group_ && o.group_ && group_->cayley() != o.group_->cayley())
        throw DomainError("tensors over different groups");
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    checkCompatible(o);
    for (auto& [k, c] : o.terms_)
        addKey(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    checkCompatible(o);
    for (auto& [k, c] : o.terms_)
        addKey(k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Cyclotomic& c)
{
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

TensorElement TensorElement::operator-() const
{
    TensorElement r = *this;
    for (auto& [k, v] : r.terms_)
        v = -v;
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b)
{
    a.checkCompatible(b);
    const FiniteGroup& G = *a.group_;
    std::vector<std::vector<int>> db;
    db.reserve(b.terms_.size());
    for (auto& [k, c] : b.terms_)
        db.push_back(b.decode(k));
    TensorElement r(a.group_, a.order_);
    std::map<TensorElement::Key, Cyclotomic> acc;
    for (auto& [ka, ca] : a.terms_) {
        auto da = a.decode(ka);
        std::size_t j = 0;
        for (auto& [kb, cb] : b.terms_) {
            TensorElement::Key key = 0;
            for (int i = 0; i < a.order_; ++i)
                key = key * G.size() + G.mul(da[i], db[j][i]);
            r.addKey(key, ca * cb);
            ++j;
        }
    }
    return r;
}

bool operator==(const TensorElement& a, const TensorElement& b)
{
    if (a.order_ != b.order_)
        return false;
    return a.terms_ == b.terms_;
}

TensorElement TensorElement::tensor(const TensorElement& o) const
{
    TensorElement r(group_, order_ + o.order_);
    Key scale = 1;
    for (int i = 0; i < o.order_; ++i)
        scale *= group_->size();
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_)
            r.addKey(ka * scale + kb, ca * cb);
    return r;
}

TensorElement TensorElement::coproduct(int leg) const
{
    if (leg < 0 || leg >= order_)
        throw DomainError("coproduct leg out of range");
    TensorElement r(group_, order_ + 1);
    for (auto& [k, c] : terms_) {
        auto d = decode(k);
        d.insert(d.begin() + leg, d[leg]);
        r.add(d, c);
    }
    return r;
}

TensorElement TensorElement::counit(int leg) const
{
    if (leg < 0 || leg >= order_)
        throw DomainError("counit leg out of range");
    TensorElement r(group_, order_ - 1);
    for (auto& [k, c] : terms_) {
        auto d = decode(k);
        d.erase(d.begin() + leg);
        r.add(d, c);
    }
    return r;
}

TensorElement TensorElement::permuted(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != order_)
        throw DomainError("leg permutation has wrong length");
    TensorElement r(group_, order_);
    std::vector<int> out(order_);
    for (auto& [k, c] : terms_) {
        auto d = decode(k);
        for (int i = 0; i < order_; ++i)
            out[i] = d[perm[i]];
        r.add(out, c);
    }
    return r;
}

TensorElement TensorElement::flip(int i, int j) const
{
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw DomainError("flip leg out of range");
    std::vector<int> perm(order_);
    for (int k = 0; k < order_; ++k)
        perm[k] = k;
    std::swap(perm[i], perm[j]);
    return permuted(perm);
}

TensorElement TensorElement::embed(int newOrder, const std::vector<int>& legs) const
{
    if (static_cast<int>(legs.size()) != order_)
        throw DomainError("embedding needs one target leg per tensor leg");
    for (int l : legs)
        if (l < 0 || l >= newOrder)
            throw DomainError("embedding leg out of range");
    TensorElement r(group_, newOrder);
    std::vector<int> out(newOrder, group_->identity());
    for (auto& [k, c] : terms_) {
        auto d = decode(k);
        std::fill(out.begin(), out.end(), group_->identity());
        for (int i = 0; i < order_; ++i)
            out[legs[i]] = d[i];
        r.add(out, c);
    }
    return r;
}

TensorElement TensorElement::antipode() const
{
    TensorElement r(group_, order_);
    for (auto& [k, c] : terms_) {
        auto d = decode(k);
        for (auto& g : d)
            g = group_->inv(g);
        r.add(d, c);
    }
    return r;
}

std::optional<TensorElement> TensorElement::tryInverse(int* kernelDim) const
{
    const int n = group_->size();
    Key total = 1;
    for (int i = 0; i < order_; ++i)
        total *= n;
    if (total > 4096)
        throw DomainError("element too large for dense inversion");
    const int S = static_cast<int>(total);
    // Column b of the left-multiplication matrix is (*this) * basis(b).
    Dense<Cyclotomic> m(S, std::vector<Cyclotomic>(S));
    for (int b = 0; b < S; ++b) {
        auto db = decode(b);
        for (auto& [k, c] : terms_) {
            auto d = decode(k);
            Key key = 0;
            for (int i = 0; i < order_; ++i)
                key = key * n + group_->mul(d[i], db[i]);
            m[key][b] += c;
        }
    }
    std::vector<Cyclotomic> rhs(S);
    rhs[encode(std::vector<int>(order_, group_->identity()))] = Cyclotomic(1);
    int r = rank(m);
    if (r < S) {
        if (kernelDim)
            *kernelDim = S - r;
        return std::nullopt;
    }
    auto x = solve(m, rhs, Cyclotomic());
    if (!x)
        throw InvariantViolation("full-rank system reported inconsistent");
    TensorElement inv(group_, order_);
    for (int b = 0; b < S; ++b)
        inv.addKey(b, (*x)[b]);
    if (kernelDim)
        *kernelDim = 0;
    return inv;
}

TensorElement TensorElement::inverse() const
{
    int k = 0;
    auto r = tryInverse(&k);
    if (!r)
        throw DomainError("element is not invertible (kernel dimension " + std::to_string(k) + ")");
    return *r;
}

std::string TensorElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        auto d = decode(k);
        for (int i = 0; i < order_; ++i)
            os << (i ? "," : "") << group_->label(d[i]);
        os << "]";
    }
    return os.str();
}

std::vector<TensorElement> primitiveIdempotents(const AbelianSubgroup& a)
{
    std::vector<TensorElement> out;
    Cyclotomic scale = Cyclotomic(Rational(1, a.size()));
    for (int mu = 0; mu < a.characterCount(); ++mu) {
        TensorElement p(a.parent(), 1);
        for (int g : a.elements())
            p.add({g}, a.characterValue(mu, g).conj() * scale);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<TensorElement> weightDecompose(const TensorElement& y, const AbelianSubgroup& a, int leg)
{
    if (leg < 0 || leg >= y.order())
        throw DomainError("weight leg out of range");
    auto P = primitiveIdempotents(a);
    std::vector<TensorElement> placed;
    for (auto& p : P)
        placed.push_back(p.embed(y.order(), {leg}));
    std::vector<TensorElement> out(a.characterCount(), TensorElement(y.group(), y.order()));
    for (int mu = 0; mu < a.characterCount(); ++mu)
        for (int nu = 0; nu < a.characterCount(); ++nu)
            out[mu] += placed[a.addCharacters(nu, mu)] * y * placed[nu];
    return out;
}

TensorElement diagonal(GroupPtr group, int g, int order)
{
    std::vector<int> d(order, g);
    return TensorElement::basis(std::move(group), d);
}

bool isZeroWeight(const TensorElement& y, const AbelianSubgroup& a)
{
    for (int g : a.generators()) {
        auto d = diagonal(y.group(), g, y.order());
        if (d * y != y * d)
            return false;
    }
    return true;
}

} // namespace dybx
