#pragma once

#include "dybx/group.hpp"

namespace dybx {

/// S_n on {1..n}, elements in lexicographic order of images; labels in cycle notation.
GroupPtr symmetricGroup(int n);
/// Symmetries of the n-gon, elements r^k s^j with s r s^{-1} = r^{-1}.
GroupPtr dihedralGroup(int n);
GroupPtr cyclicGroup(int n);
GroupPtr directProduct(const FiniteGroup& a, const FiniteGroup& b);

SubgroupPtr subgroupGeneratedBy(GroupPtr g, const std::vector<int>& generators);

/// Named instance such as "S3", "D4", "Z5", "Z2xZ2"; nullptr when unknown.
GroupPtr builtinGroup(const std::string& name);

} // namespace dybx
