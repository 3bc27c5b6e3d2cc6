#include "sepsplit/mask.hpp"

#include <algorithm>
#include <bit>

namespace sepsplit {

namespace {

int words_for(int k) { return (k + 63) / 64; }

void require_same_k(const SubsetMask& a, const SubsetMask& b) {
    if (a.k() != b.k())
        throw DimensionError("ground sets differ: k=" + std::to_string(a.k()) +
                             " vs k=" + std::to_string(b.k()));
}

}  // namespace

SubsetMask::SubsetMask(int k) : k_(k), words_(words_for(k), 0) {
    if (k < 1 || k > K_MAX)
        throw DomainError("ground-set size k must be in [1, " +
                          std::to_string(K_MAX) + "], got " + std::to_string(k));
}

SubsetMask SubsetMask::of(int k, std::initializer_list<int> elements) {
    SubsetMask a(k);
    for (int e : elements) a.add(e);
    return a;
}

SubsetMask SubsetMask::from_elements(int k, const std::vector<int>& elements) {
    SubsetMask a(k);
    for (int e : elements) a.add(e);
    return a;
}

SubsetMask SubsetMask::from_bits(int k, std::uint64_t bits) {
    SubsetMask a(k);
    a.set_bits(bits);
    return a;
}

SubsetMask SubsetMask::full(int k) {
    SubsetMask a(k);
    for (auto& w : a.words_) w = ~std::uint64_t{0};
    int tail = k % 64;
    if (tail != 0) a.words_.back() = (std::uint64_t{1} << tail) - 1;
    return a;
}

void SubsetMask::check_element(int element) const {
    if (element < 1 || element > k_)
        throw DomainError("element " + std::to_string(element) +
                          " outside [1, " + std::to_string(k_) + "]");
}

int SubsetMask::size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool SubsetMask::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool SubsetMask::contains(int element) const {
    check_element(element);
    int b = element - 1;
    return (words_[b >> 6] >> (b & 63)) & 1;
}

void SubsetMask::add(int element) {
    check_element(element);
    int b = element - 1;
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void SubsetMask::remove(int element) {
    check_element(element);
    int b = element - 1;
    words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

SubsetMask SubsetMask::complement() const {
    SubsetMask out = full(k_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
    return out;
}

SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    SubsetMask out(a.k_);
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] = a.words_[i] & b.words_[i];
    return out;
}

SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    SubsetMask out(a.k_);
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] = a.words_[i] | b.words_[i];
    return out;
}

SubsetMask operator^(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    SubsetMask out(a.k_);
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] = a.words_[i] ^ b.words_[i];
    return out;
}

SubsetMask SubsetMask::operator-(const SubsetMask& other) const {
    require_same_k(*this, other);
    SubsetMask out(k_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & ~other.words_[i];
    return out;
}

bool SubsetMask::operator==(const SubsetMask& other) const {
    return k_ == other.k_ && words_ == other.words_;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
    require_same_k(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
    require_same_k(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i) * 64 + b + 1);
            w &= w - 1;
        }
    }
    return out;
}

int SubsetMask::min_element() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return static_cast<int>(i) * 64 + std::countr_zero(words_[i]) + 1;
    return 0;
}

void SubsetMask::set_bits(std::uint64_t bits) {
    if (k_ > 64) throw DomainError("set_bits requires k <= 64");
    if (k_ < 64 && (bits >> k_) != 0)
        throw DomainError("bits set beyond position k");
    words_[0] = bits;
}

bool SubsetMask::lex_less(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    // Ascending element sequences compared lexicographically; a proper
    // prefix precedes its extensions ({1} < {1,2} < {1,3} < {2}).
    std::vector<int> ea = a.elements();
    std::vector<int> eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                        eb.end());
}

std::string SubsetMask::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

int intersection_size(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    int total = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        total += std::popcount(a.words()[i] & b.words()[i]);
    return total;
}

int hamming_distance(const SubsetMask& a, const SubsetMask& b) {
    require_same_k(a, b);
    int total = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        total += std::popcount(a.words()[i] ^ b.words()[i]);
    return total;
}

}  // namespace sepsplit
