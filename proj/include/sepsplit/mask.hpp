#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sepsplit/errors.hpp"

namespace sepsplit {

// Largest supported ground-set size. Multi-word storage supports any k up
// to this capacity; most brute-force operations are further guarded.
inline constexpr int K_MAX = 1 << 16;

/// A subset of the ground set [k] = {1, ..., k}, stored as a bit vector.
/// Elements are 1-based externally (element e lives at bit e-1). All bits
/// at positions >= k are kept zero, so whole-word operations are safe.
class SubsetMask {
  public:
    // The empty subset of [k].
    explicit SubsetMask(int k);

    static SubsetMask of(int k, std::initializer_list<int> elements);
    static SubsetMask from_elements(int k, const std::vector<int>& elements);
    // Low 64 bits given directly; requires k <= 64. Bit j holds element j+1.
    static SubsetMask from_bits(int k, std::uint64_t bits);
    static SubsetMask full(int k);

    int k() const { return k_; }
    int size() const;  // |A|
    bool empty() const;
    bool is_full() const { return size() == k_; }

    bool contains(int element) const;  // 1-based
    void add(int element);
    void remove(int element);

    SubsetMask complement() const;  // within [k]

    // Whole-set operations; DimensionError on mismatched k.
    friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b);
    friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b);
    friend SubsetMask operator^(const SubsetMask& a, const SubsetMask& b);
    SubsetMask operator-(const SubsetMask& other) const;  // set difference

    bool operator==(const SubsetMask& other) const;
    bool operator!=(const SubsetMask& other) const { return !(*this == other); }

    bool intersects(const SubsetMask& other) const;
    bool subset_of(const SubsetMask& other) const;

    // Ascending 1-based element list.
    std::vector<int> elements() const;
    // Smallest element, or 0 if empty.
    int min_element() const;

    // Low word of the bit vector (all of it when k <= 64). Hot paths in the
    // guarded brute-force routines work on these raw bits.
    std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    // Replace the low word; requires k <= 64.
    void set_bits(std::uint64_t bits);

    // Order on ascending element sequences compared lexicographically,
    // e.g. {} < {1} < {1,2} < {1,3} < {2}. Used for witness tie-breaking.
    static bool lex_less(const SubsetMask& a, const SubsetMask& b);

    // "{1,3,5}" or "{}"; for error messages and reports.
    std::string to_string() const;

  private:
    int k_;
    std::vector<std::uint64_t> words_;

    void check_element(int element) const;
};

int intersection_size(const SubsetMask& a, const SubsetMask& b);
int hamming_distance(const SubsetMask& a, const SubsetMask& b);

}  // namespace sepsplit
