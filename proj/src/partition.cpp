#include "gdc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

constexpr std::size_t kSetPartitionCap = 13;
constexpr std::size_t kIntegerPartitionCap = 60;

char label_char(std::uint32_t label) {
  if (label < 10) return static_cast<char>('0' + label);
  if (label < 36) return static_cast<char>('a' + (label - 10));
  throw DomainError("partition label too large for RGS text form");
}

std::uint32_t char_label(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
  throw DomainError(std::string("bad RGS character: ") + c);
}

void check_set_n(int n) {
  if (n < 1) throw DomainError("ground set size must be positive");
  check_cap("SET_PARTITION_N", kSetPartitionCap, static_cast<std::size_t>(n));
}

}  // namespace

SetPartition::SetPartition(std::vector<std::uint32_t> rgs) : rgs_(std::move(rgs)) {
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    if (rgs_[i] > next) throw DomainError("not a restricted growth string");
    if (rgs_[i] == next) ++next;
  }
  blocks_ = static_cast<int>(next);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::uint32_t> rgs(n);
  std::iota(rgs.begin(), rgs.end(), 0u);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::full(int n) {
  return SetPartition(std::vector<std::uint32_t>(n, 0u));
}

SetPartition SetPartition::from_labels(const std::vector<std::uint32_t>& labels) {
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  std::vector<std::uint32_t> rgs(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(labels[i], static_cast<std::uint32_t>(remap.size()));
    rgs[i] = it->second;
  }
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::uint32_t> labels(n, UINT32_MAX);
  std::uint32_t b = 0;
  for (const auto& block : blocks) {
    for (int e : block) {
      if (e < 1 || e > n) throw DomainError("block element out of range");
      if (labels[e - 1] != UINT32_MAX) throw DomainError("element in two blocks");
      labels[e - 1] = b;
    }
    ++b;
  }
  for (auto l : labels) {
    if (l == UINT32_MAX) throw DomainError("blocks do not cover the ground set");
  }
  return from_labels(labels);
}

SetPartition SetPartition::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("RGS:", 0) == 0) body = body.substr(4);
  if (body.empty()) throw DomainError("empty RGS");
  std::vector<std::uint32_t> rgs;
  rgs.reserve(body.size());
  for (char c : body) rgs.push_back(char_label(c));
  return SetPartition(std::move(rgs));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < size(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(blocks_, 0);
  for (auto l : rgs_) ++out[l];
  return out;
}

std::string SetPartition::to_string() const {
  std::string out = "RGS:";
  for (auto l : rgs_) out.push_back(label_char(l));
  return out;
}

std::string SetPartition::to_block_string() const {
  std::string out;
  for (const auto& block : blocks()) {
    out += "{";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(block[j] + 1);
    }
    out += "}";
  }
  return out;
}

std::uint64_t SetPartition::key() const {
  if (rgs_.size() > 15) throw DomainError("partition too large for packed key");
  std::uint64_t k = rgs_.size();
  for (auto l : rgs_) k = (k << 4) | l;
  return k;
}

IntegerPartition::IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts) {
    if (x <= 0) throw DomainError("integer partition parts must be positive");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>())) {
    throw DomainError("integer partition parts must be non-increasing");
  }
}

int IntegerPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string IntegerPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "-";
    out += std::to_string(parts[i]);
  }
  return out;
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return c == '[' || c == ']' || c == ' '; }),
             body.end());
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto next = body.find_first_of("-,", pos);
    std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("malformed integer partition: " + text);
    }
    parts.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return IntegerPartition(std::move(parts));
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw DomainError("bell_number argument out of range");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  check_set_n(n);
  std::vector<std::uint32_t> rgs(n, 0u);
  std::vector<std::uint32_t> prefix_max(n, 0u);  // max of rgs[0..i]
  while (true) {
    visit(SetPartition(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  check_set_n(n);
  std::vector<SetPartition> out;
  out.reserve(bell_number(n));
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<IntegerPartition> enumerate_integer_partitions(int n) {
  if (n < 1) throw DomainError("integer must be positive");
  check_cap("INTEGER_PARTITION_N", kIntegerPartitionCap, static_cast<std::size_t>(n));
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SetPartition induced_partition(const SetPartition& pi, const std::vector<int>& subset) {
  if (subset.empty()) throw DomainError("induced_partition needs a non-empty subset");
  std::vector<std::uint32_t> labels;
  labels.reserve(subset.size());
  int prev = 0;
  for (int e : subset) {
    if (e < 1 || e > pi.size()) throw DomainError("subset element outside the ground set");
    if (e <= prev) throw DomainError("subset must be strictly increasing");
    prev = e;
    labels.push_back(pi.label(e - 1));
  }
  return SetPartition::from_labels(labels);
}

void validate_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw DomainError("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("not a permutation");
    seen[v - 1] = true;
  }
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

std::vector<int> invert(const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[sigma[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

SetPartition apply_permutation(const std::vector<int>& sigma, const SetPartition& pi) {
  validate_permutation(sigma, pi.size());
  // New label of x is the old label of sigma^{-1}(x).
  std::vector<std::uint32_t> labels(pi.size());
  for (int i = 0; i < pi.size(); ++i) labels[sigma[i] - 1] = pi.label(i);
  return SetPartition::from_labels(labels);
}

IntegerPartition integer_shape(const SetPartition& pi) {
  auto sizes = pi.block_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return IntegerPartition(std::move(sizes));
}

PartitionIndex::PartitionIndex(int n) : n_(n), table_(enumerate_set_partitions(n)) {
  lookup_.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) lookup_.emplace(table_[i].key(), i);
}

std::size_t PartitionIndex::position(const SetPartition& pi) const {
  if (pi.size() != n_) throw DomainError("partition size does not match index");
  auto it = lookup_.find(pi.key());
  if (it == lookup_.end()) throw DomainError("partition not in index");
  return it->second;
}

}  // namespace gdc
