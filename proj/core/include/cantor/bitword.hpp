#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// A finite word over {0,1}; the empty word is allowed.  Words name the
/// clopen cylinders of the dyadic Cantor space: C(r) is the set of all
/// infinite sequences extending r.
class BitWord {
public:
    BitWord() = default;

    /// Builds a word from a string of '0'/'1' characters.  Throws
    /// std::invalid_argument on any other character.
    explicit BitWord(std::string_view bits);

    static BitWord zeros(std::size_t n);
    static BitWord ones(std::size_t n);

    /// Parses the external syntax: a bare bit string, or "e" (or the UTF-8
    /// "ε") for the empty word.
    static BitWord parse(std::string_view text);

    std::size_t level() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    /// Bit at 0-based position i (0 or 1).
    int bit(std::size_t i) const { return bits_[i] - '0'; }

    int front() const { return bits_.front() - '0'; }
    int back() const { return bits_.back() - '0'; }

    BitWord concat(const BitWord& other) const;
    BitWord append(int bit) const;
    BitWord prefix(std::size_t n) const;   // first n bits
    BitWord suffix_from(std::size_t n) const;  // bits n..end
    BitWord pop_back() const;

    bool is_prefix_of(const BitWord& other) const;

    /// The word with the last bit flipped; requires a nonempty word.
    BitWord sibling() const;

    const std::string& str() const { return bits_; }

    /// External syntax: bare bits, or "e" when empty.
    std::string display() const { return bits_.empty() ? "e" : bits_; }

    friend bool operator==(const BitWord&, const BitWord&) = default;
    /// Lexicographic order; with '0' < '1' this is the order in which the
    /// cylinders appear on the space.
    friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::string bits_;
};

enum class CylinderRelation { Disjoint, Equal, Contains, ContainedIn };

/// How the cylinders C(r) and C(s) relate: two cylinders are either
/// disjoint or one contains the other (prefix trichotomy).
CylinderRelation cylinder_relation(const BitWord& r, const BitWord& s);

bool cylinders_disjoint(const BitWord& r, const BitWord& s);

/// A finite set of pairwise disjoint subroots whose cylinders cover the
/// whole space, i.e. a complete prefix code.  Roots are kept sorted.
struct Partition {
    std::vector<BitWord> roots;

    friend bool operator==(const Partition&, const Partition&) = default;
    std::string display() const;
};

/// True iff the words are pairwise disjoint as cylinders.
bool pairwise_disjoint(const std::vector<BitWord>& words);

/// True iff the words form a complete prefix code (pairwise disjoint and
/// their cylinders cover the space).
bool is_complete_prefix_code(const std::vector<BitWord>& words);

/// Extends pairwise disjoint subroots to a partition of the space.  The
/// construction takes all words of level N = 1 + max input level, drops
/// those dominated by an input, then merges full sibling pairs that do not
/// touch the inputs, so the result is the minimal completion.  Throws on
/// overlapping inputs.
Partition complete_partition(const std::vector<BitWord>& roots);

/// The unmerged intermediate step of complete_partition: inputs plus all
/// non-dominated words of level 1 + max input level.
std::vector<BitWord> complete_partition_raw(const std::vector<BitWord>& roots);

/// The partition into all 2^N subroots of level N; each member cylinder
/// has diameter at most 2^-(N+1).
Partition epsilon_partition(std::size_t n);

/// Minimal cylinder decomposition of the complement of the given disjoint
/// cylinders (empty input yields {e}; a covering input yields {}).
std::vector<BitWord> complement_cylinders(const std::vector<BitWord>& words);

}  // namespace cantor
