#pragma once

#include <cstdint>
#include <vector>

#include "sepsplit/mask.hpp"

namespace sepsplit {

/// A duplicate-free list of subsets over a common ground set [k]. Set
/// semantics: equality ignores order and insertions that would duplicate an
/// existing member are dropped silently. Insertion order is retained for
/// display and matrix rows only.
class SetFamily {
  public:
    explicit SetFamily(int k);
    SetFamily(int k, const std::vector<SubsetMask>& members);

    int k() const { return k_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    // Skips duplicates silently; DimensionError on mismatched k.
    void insert(const SubsetMask& member);

    bool contains(const SubsetMask& member) const;

    const SubsetMask& operator[](int i) const { return members_[i]; }
    std::vector<SubsetMask>::const_iterator begin() const { return members_.begin(); }
    std::vector<SubsetMask>::const_iterator end() const { return members_.end(); }
    const std::vector<SubsetMask>& members() const { return members_; }

    // Set equality: same k and same members in any order.
    bool operator==(const SetFamily& other) const;
    bool operator!=(const SetFamily& other) const { return !(*this == other); }

  private:
    int k_;
    std::vector<SubsetMask> members_;
};

/// An ordered tuple (B_1, ..., B_n) of subsets of a common [k]; the object
/// to be simultaneously separated or split. n >= 1.
class SetCollection {
  public:
    explicit SetCollection(const std::vector<SubsetMask>& sets);

    int k() const { return k_; }
    int n() const { return static_cast<int>(sets_.size()); }
    const SubsetMask& operator[](int i) const { return sets_[i]; }
    const std::vector<SubsetMask>& sets() const { return sets_; }

    // Union of all members.
    SubsetMask set_union() const;

    std::string to_string() const;

  private:
    int k_;
    std::vector<SubsetMask> sets_;
};

/// An m x k 0/1 matrix. When produced from a SetFamily, row i is the
/// characteristic vector of member i. Rows and columns are 1-based.
class BinaryMatrix {
  public:
    BinaryMatrix(int rows, int cols);

    int rows() const { return m_; }
    int cols() const { return k_; }

    bool get(int row, int col) const;
    void set(int row, int col, bool value);

    bool operator==(const BinaryMatrix& other) const;

    // Rows as '0'/'1' text lines (the MATRIX serialization body).
    std::string to_string() const;

  private:
    int m_, k_;
    int words_per_row_;
    std::vector<std::uint64_t> bits_;  // row-major

    friend bool is_separating_matrix(const BinaryMatrix&);
    friend int min_pairwise_column_distance(const BinaryMatrix&);
};

/// A set of distinct vertices of the Hamming cube Q_m, kept sorted
/// ascending as unsigned m-bit integers (most significant coordinate =
/// matrix row 1).
struct CubePointSet {
    int m = 0;
    std::vector<std::uint32_t> points;

    bool operator==(const CubePointSet& other) const {
        return m == other.m && points == other.points;
    }
};

BinaryMatrix family_to_matrix(const SetFamily& family);
// Duplicate rows collapse to one member; *duplicates_collapsed reports it.
SetFamily matrix_to_family(const BinaryMatrix& matrix,
                           bool* duplicates_collapsed = nullptr);

// The full power set of [k] in ascending mask order; guard k <= 20.
SetFamily all_subsets_family(int k);

}  // namespace sepsplit
