#include "sepsplit/family.hpp"

#include <algorithm>

#include "sepsplit/errors.hpp"

namespace sepsplit {

SetFamily::SetFamily(int k) : k_(k) {
    if (k < 1 || k > K_MAX)
        throw DomainError("family ground-set size k must be in [1, " +
                          std::to_string(K_MAX) + "], got " + std::to_string(k));
}

SetFamily::SetFamily(int k, const std::vector<SubsetMask>& members)
    : SetFamily(k) {
    for (const auto& m : members) insert(m);
}

void SetFamily::insert(const SubsetMask& member) {
    if (member.k() != k_)
        throw DimensionError("member over k=" + std::to_string(member.k()) +
                             " inserted into family over k=" + std::to_string(k_));
    if (!contains(member)) members_.push_back(member);
}

bool SetFamily::contains(const SubsetMask& member) const {
    return std::find(members_.begin(), members_.end(), member) != members_.end();
}

bool SetFamily::operator==(const SetFamily& other) const {
    if (k_ != other.k_ || members_.size() != other.members_.size()) return false;
    for (const auto& m : members_)
        if (!other.contains(m)) return false;
    return true;
}

SetCollection::SetCollection(const std::vector<SubsetMask>& sets) : sets_(sets) {
    if (sets_.empty()) throw DomainError("collection needs at least one set");
    k_ = sets_.front().k();
    for (const auto& s : sets_)
        if (s.k() != k_)
            throw DimensionError("collection members over different ground sets");
}

SubsetMask SetCollection::set_union() const {
    SubsetMask u(k_);
    for (const auto& s : sets_) u = u | s;
    return u;
}

std::string SetCollection::to_string() const {
    std::string out = "(";
    for (int i = 0; i < n(); ++i) {
        if (i > 0) out += ", ";
        out += sets_[i].to_string();
    }
    out += ")";
    return out;
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : m_(rows), k_(cols), words_per_row_((cols + 63) / 64) {
    if (rows < 1 || cols < 1)
        throw DomainError("matrix dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(m_) * words_per_row_, 0);
}

bool BinaryMatrix::get(int row, int col) const {
    if (row < 1 || row > m_ || col < 1 || col > k_)
        throw DomainError("matrix index out of range");
    int b = col - 1;
    return (bits_[static_cast<std::size_t>(row - 1) * words_per_row_ + (b >> 6)] >>
            (b & 63)) &
           1;
}

void BinaryMatrix::set(int row, int col, bool value) {
    if (row < 1 || row > m_ || col < 1 || col > k_)
        throw DomainError("matrix index out of range");
    int b = col - 1;
    std::uint64_t& w =
        bits_[static_cast<std::size_t>(row - 1) * words_per_row_ + (b >> 6)];
    if (value)
        w |= std::uint64_t{1} << (b & 63);
    else
        w &= ~(std::uint64_t{1} << (b & 63));
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return m_ == other.m_ && k_ == other.k_ && bits_ == other.bits_;
}

std::string BinaryMatrix::to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(m_) * (k_ + 1));
    for (int i = 1; i <= m_; ++i) {
        for (int j = 1; j <= k_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BinaryMatrix family_to_matrix(const SetFamily& family) {
    if (family.empty())
        throw EmptyFamilyError("matrix representation of an empty family");
    BinaryMatrix m(family.size(), family.k());
    for (int i = 0; i < family.size(); ++i)
        for (int e : family[i].elements()) m.set(i + 1, e, true);
    return m;
}

SetFamily matrix_to_family(const BinaryMatrix& matrix,
                           bool* duplicates_collapsed) {
    SetFamily family(matrix.cols());
    bool dupes = false;
    for (int i = 1; i <= matrix.rows(); ++i) {
        SubsetMask row(matrix.cols());
        for (int j = 1; j <= matrix.cols(); ++j)
            if (matrix.get(i, j)) row.add(j);
        if (family.contains(row)) dupes = true;
        family.insert(row);
    }
    if (duplicates_collapsed != nullptr) *duplicates_collapsed = dupes;
    return family;
}

SetFamily all_subsets_family(int k) {
    if (k < 1) throw DomainError("power set requires k >= 1");
    if (k > 20) throw GuardExceeded("power set materialized only for k <= 20");
    SetFamily family(k);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits)
        family.insert(SubsetMask::from_bits(k, bits));
    return family;
}

}  // namespace sepsplit
