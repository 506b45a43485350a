#pragma once

#include <vector>

#include "gwwedge/rational.hpp"

namespace gwwedge {

// A set partition of {0..n-1}: blocks ordered by smallest element, each block ascending.
using SetPartition = std::vector<std::vector<int>>;

std::vector<SetPartition> set_partitions(int n);
// set partitions of an arbitrary list of labels (same canonical ordering by position)
std::vector<SetPartition> set_partitions_of(const std::vector<int>& labels);

// (-1)^{k-1} (k-1)! for a partition with k blocks
Rational moebius_weight(const SetPartition& p);

}  // namespace gwwedge
