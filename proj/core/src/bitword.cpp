#include "cantor/bitword.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cantor {

BitWord::BitWord(std::string_view bits) : bits_(bits) {
    for (char c : bits_) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitWord: invalid character '" + std::string(1, c) + "'");
        }
    }
}

BitWord BitWord::zeros(std::size_t n) {
    BitWord w;
    w.bits_.assign(n, '0');
    return w;
}

BitWord BitWord::ones(std::size_t n) {
    BitWord w;
    w.bits_.assign(n, '1');
    return w;
}

BitWord BitWord::parse(std::string_view text) {
    if (text == "e" || text == "\xce\xb5") return BitWord{};
    return BitWord(text);
}

BitWord BitWord::concat(const BitWord& other) const {
    BitWord w;
    w.bits_ = bits_ + other.bits_;
    return w;
}

BitWord BitWord::append(int bit) const {
    BitWord w = *this;
    w.bits_.push_back(bit ? '1' : '0');
    return w;
}

BitWord BitWord::prefix(std::size_t n) const {
    BitWord w;
    w.bits_ = bits_.substr(0, n);
    return w;
}

BitWord BitWord::suffix_from(std::size_t n) const {
    BitWord w;
    w.bits_ = n >= bits_.size() ? std::string{} : bits_.substr(n);
    return w;
}

BitWord BitWord::pop_back() const {
    BitWord w = *this;
    w.bits_.pop_back();
    return w;
}

bool BitWord::is_prefix_of(const BitWord& other) const {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
}

BitWord BitWord::sibling() const {
    if (empty()) throw std::invalid_argument("sibling: empty word");
    BitWord w = *this;
    w.bits_.back() = w.bits_.back() == '0' ? '1' : '0';
    return w;
}

CylinderRelation cylinder_relation(const BitWord& r, const BitWord& s) {
    if (r == s) return CylinderRelation::Equal;
    if (r.is_prefix_of(s)) return CylinderRelation::Contains;
    if (s.is_prefix_of(r)) return CylinderRelation::ContainedIn;
    return CylinderRelation::Disjoint;
}

bool cylinders_disjoint(const BitWord& r, const BitWord& s) {
    return cylinder_relation(r, s) == CylinderRelation::Disjoint;
}

std::string Partition::display() const {
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) out += ',';
        out += roots[i].display();
    }
    return out;
}

bool pairwise_disjoint(const std::vector<BitWord>& words) {
    // In lexicographic order a word's extensions follow it directly, so
    // checking adjacent pairs suffices.
    std::vector<BitWord> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].is_prefix_of(sorted[i + 1])) return false;
    }
    return true;
}

namespace {

constexpr std::size_t kMaxLevel = 48;

void check_levels(const std::vector<BitWord>& words) {
    for (const auto& w : words) {
        if (w.level() > kMaxLevel) {
            throw std::invalid_argument("bitword level exceeds supported maximum");
        }
    }
}

}  // namespace

bool is_complete_prefix_code(const std::vector<BitWord>& words) {
    if (words.empty()) return false;
    if (!pairwise_disjoint(words)) return false;
    check_levels(words);
    std::size_t max_level = 0;
    for (const auto& w : words) max_level = std::max(max_level, w.level());
    // Disjoint cylinders cover the space iff their measures sum to 1.
    unsigned long long total = 0;
    for (const auto& w : words) total += 1ULL << (max_level - w.level());
    return total == (1ULL << max_level);
}

std::vector<BitWord> complete_partition_raw(const std::vector<BitWord>& roots) {
    if (!pairwise_disjoint(roots)) {
        throw std::invalid_argument("complete_partition: inputs overlap");
    }
    if (roots.empty()) return {BitWord{}};
    check_levels(roots);
    std::size_t max_level = 0;
    for (const auto& w : roots) max_level = std::max(max_level, w.level());
    const std::size_t n = max_level + 1;
    if (n > 26) throw std::invalid_argument("complete_partition: level too large");

    std::vector<BitWord> out = roots;
    for (unsigned long long v = 0; v < (1ULL << n); ++v) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = ((v >> (n - 1 - i)) & 1) ? '1' : '0';
        }
        BitWord w{bits};
        bool dominated = false;
        for (const auto& r : roots) {
            if (r.is_prefix_of(w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition complete_partition(const std::vector<BitWord>& roots) {
    std::vector<BitWord> raw = complete_partition_raw(roots);
    std::set<BitWord> pool(raw.begin(), raw.end());
    std::set<BitWord> inputs(roots.begin(), roots.end());

    // Greedily merge full sibling pairs not containing an input root.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            const BitWord& w = *it;
            if (w.empty() || w.back() != 0) continue;
            if (inputs.count(w)) continue;
            BitWord sib = w.sibling();
            if (!pool.count(sib) || inputs.count(sib)) continue;
            BitWord parent = w.pop_back();
            pool.erase(sib);
            pool.erase(it);
            pool.insert(parent);
            changed = true;
            break;
        }
    }
    Partition p;
    p.roots.assign(pool.begin(), pool.end());
    return p;
}

Partition epsilon_partition(std::size_t n) {
    if (n > 26) throw std::invalid_argument("epsilon_partition: level too large");
    Partition p;
    if (n == 0) {
        p.roots = {BitWord{}};
        return p;
    }
    for (unsigned long long v = 0; v < (1ULL << n); ++v) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = ((v >> (n - 1 - i)) & 1) ? '1' : '0';
        }
        p.roots.emplace_back(bits);
    }
    std::sort(p.roots.begin(), p.roots.end());
    return p;
}

std::vector<BitWord> complement_cylinders(const std::vector<BitWord>& words) {
    if (words.empty()) return {BitWord{}};
    Partition full = complete_partition(words);
    std::set<BitWord> inputs(words.begin(), words.end());
    std::vector<BitWord> out;
    for (const auto& w : full.roots) {
        if (!inputs.count(w)) out.push_back(w);
    }
    return out;
}

}  // namespace cantor
