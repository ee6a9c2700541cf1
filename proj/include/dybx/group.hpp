#pragma once

#include "dybx/cyclotomic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dybx {

/// Finite group given by its Cayley table. Element 0 need not be the identity.
class FiniteGroup {
public:
    /// Validates closure, associativity, identity and inverses.
    FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels = {});

    int size() const { return size_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a * size_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    /// a b a^-1
    int conjugate(int a, int b) const { return mul(mul(a, b), inv(a)); }
    int order(int a) const;
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<std::vector<int>> cayley() const;
    /// Index of the element with the given label, or -1.
    int find(const std::string& label) const;

private:
    int size_;
    int identity_ = -1;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite abelian subgroup A of G with a cyclic decomposition
/// A = <g_1> x ... x <g_r>. Characters lambda in A* are indexed by tuples
/// (k_1..k_r), k_i mod n_i, with lambda(g_i) = zeta_{n_i}^{k_i}; the group A* is
/// written additively.
class AbelianSubgroup {
public:
    AbelianSubgroup(GroupPtr parent, std::vector<int> elements);

    const GroupPtr& parent() const { return parent_; }
    const FiniteGroup& group() const { return *parent_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int g) const { return position_[g] >= 0; }
    int position(int g) const { return position_[g]; }
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<int>& generatorOrders() const { return orders_; }
    /// N, the exponent of A; every character value lies in Q(zeta_N).
    int exponent() const { return exponent_; }

    // Character group A*.
    int characterCount() const { return size(); }
    std::vector<int> characterTuple(int chi) const;
    int characterIndex(const std::vector<int>& tuple) const;
    int addCharacters(int a, int b) const;
    int negateCharacter(int a) const;
    int subtractCharacters(int a, int b) const { return addCharacters(a, negateCharacter(b)); }
    /// chi(g) = zeta_N^{exponent}; g must lie in A.
    int characterExponent(int chi, int g) const;
    Cyclotomic characterValue(int chi, int g) const;
    /// Index of the character a -> chi(n a n^-1), for n normalizing A.
    int conjugateCharacter(int chi, int n) const;
    bool isNormalizedBy(int n) const;
    /// Index of the restriction of chi to the subgroup `sub` (a subset of A).
    int restrictCharacter(int chi, const AbelianSubgroup& sub) const;

    bool operator==(const AbelianSubgroup& o) const { return parent_ == o.parent_ && elements_ == o.elements_; }

private:
    GroupPtr parent_;
    std::vector<int> elements_;
    std::vector<int> position_;
    std::vector<int> generators_;
    std::vector<int> orders_;
    std::vector<std::vector<int>> coords_; // per position: exponents along generators
    int exponent_ = 1;
};

using SubgroupPtr = std::shared_ptr<const AbelianSubgroup>;

/// A character as an explicit table position -> exponent mod N.
struct Character {
    int index;
    std::vector<int> tuple;
    std::vector<int> exponents;
};

std::vector<Character> characters(const AbelianSubgroup& a);

} // namespace dybx
