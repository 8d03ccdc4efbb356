#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gdc {

// Set partition of {1..n} stored as a restricted growth string (0-based positions).
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::uint32_t> rgs);

  static SetPartition singletons(int n);
  static SetPartition full(int n);
  // Arbitrary labels, relabeled by first occurrence.
  static SetPartition from_labels(const std::vector<std::uint32_t>& labels);
  // Blocks of 1-based elements.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition parse(const std::string& text);

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }
  const std::vector<std::uint32_t>& rgs() const { return rgs_; }
  std::uint32_t label(int i) const { return rgs_[i]; }
  bool same_block(int i, int j) const { return rgs_[i] == rgs_[j]; }
  // 0-based members of each block, in label order.
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  // "RGS:00102"; labels above 9 use lowercase letters.
  std::string to_string() const;
  // "{1,2}{3}" with 1-based elements.
  std::string to_block_string() const;
  std::uint64_t key() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (a.rgs_.size() != b.rgs_.size()) return a.rgs_.size() <=> b.rgs_.size();
    return a.rgs_ <=> b.rgs_;
  }

 private:
  std::vector<std::uint32_t> rgs_;
  int blocks_ = 0;
};

struct IntegerPartition {
  std::vector<int> parts;  // non-increasing

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);

  int total() const;
  std::string to_string() const;  // "4-2-1"
  static IntegerPartition parse(const std::string& text);

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
    return a.parts <=> b.parts;
  }
};

std::uint64_t bell_number(int n);

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_set_partitions(int n);

// Reverse-lexicographic: [n], [n-1,1], ...
std::vector<IntegerPartition> enumerate_integer_partitions(int n);

// K: sorted 1-based elements.
SetPartition induced_partition(const SetPartition& pi, const std::vector<int>& subset);

// sigma: one-line 1-based permutation, sigma[i-1] = image of i.
SetPartition apply_permutation(const std::vector<int>& sigma, const SetPartition& pi);
void validate_permutation(const std::vector<int>& sigma, int n);
std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> invert(const std::vector<int>& sigma);

IntegerPartition integer_shape(const SetPartition& pi);

class PartitionIndex {
 public:
  explicit PartitionIndex(int n);

  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  const SetPartition& at(std::size_t i) const { return table_[i]; }
  std::size_t position(const SetPartition& pi) const;
  const std::vector<SetPartition>& all() const { return table_; }

 private:
  int n_;
  std::vector<SetPartition> table_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

}  // namespace gdc
