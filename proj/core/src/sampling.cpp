#include "cantor/sampling.hpp"

#include <algorithm>
#include <set>

namespace cantor::sampling {

namespace {

int coin(Rng& rng) { return static_cast<int>(rng() & 1); }

std::size_t below(Rng& rng, std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

}  // namespace

BitWord random_word_exact(Rng& rng, std::size_t level) {
    std::string bits(level, '0');
    for (auto& c : bits) c = coin(rng) ? '1' : '0';
    return BitWord{bits};
}

BitWord random_word(Rng& rng, std::size_t max_level) {
    return random_word_exact(rng, below(rng, max_level + 1));
}

Point random_point(Rng& rng, std::size_t max_pre, std::size_t max_per) {
    BitWord pre = random_word(rng, max_pre);
    BitWord per = random_word_exact(rng, 1 + below(rng, max_per));
    return Point::make(pre, per);
}

Point random_dyadic(Rng& rng, std::size_t max_pre) {
    return Point::make(random_word(rng, max_pre), BitWord("0"));
}

Point random_point_in(Rng& rng, const BitWord& w, std::size_t max_pre, std::size_t max_per) {
    return random_point(rng, max_pre, max_per).with_prefix(w);
}

std::vector<BitWord> random_code(Rng& rng, std::size_t splits) {
    std::vector<BitWord> leaves{BitWord{}};
    for (std::size_t i = 0; i < splits; ++i) {
        std::size_t j = below(rng, leaves.size());
        BitWord w = leaves[j];
        leaves.erase(leaves.begin() + static_cast<long>(j));
        leaves.push_back(w.append(0));
        leaves.push_back(w.append(1));
    }
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}

PrefixMap random_prefix_map(Rng& rng, std::size_t splits) {
    std::size_t n = 1 + below(rng, splits);
    std::vector<BitWord> dom = random_code(rng, n);
    std::vector<BitWord> ran = random_code(rng, n);
    std::shuffle(ran.begin(), ran.end(), rng);
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < dom.size(); ++i) pieces.push_back(Piece{dom[i], ran[i]});
    return PrefixMap::make(std::move(pieces));
}

PrefixMap random_stabilizer_map(Rng& rng, std::size_t splits) {
    std::size_t n = 1 + below(rng, splits);
    std::vector<BitWord> dom = random_code(rng, n);
    std::vector<BitWord> ran = random_code(rng, n);
    // Both codes are sorted, so the all-zeros leaves come first; pairing
    // them keeps (0) fixed.
    std::shuffle(ran.begin() + 1, ran.end(), rng);
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < dom.size(); ++i) pieces.push_back(Piece{dom[i], ran[i]});
    return PrefixMap::make(std::move(pieces));
}

PrefixMap random_map_fixing_cylinder(Rng& rng, const BitWord& u, std::size_t splits) {
    PrefixMap g = PrefixMap::identity();
    for (const auto& w : complement_cylinders({u})) {
        if (coin(rng)) g = g * localize(random_prefix_map(rng, splits), w);
    }
    return g;
}

FatPoint random_fat_point(Rng& rng) {
    BitWord w = random_word(rng, 4);
    PrefixMap g = random_prefix_map(rng, 4);
    PrefixInjection tissue = compose(g, PrefixInjection::prepend(w));
    return make_fat_point(tissue(Point()), tissue);
}

std::vector<Point> random_distinct_dyadic(Rng& rng, std::size_t count, std::size_t max_pre) {
    std::set<Point> seen;
    while (seen.size() < count) seen.insert(random_dyadic(rng, max_pre));
    return {seen.begin(), seen.end()};
}

std::vector<FatPoint> random_fat_tuple(Rng& rng, std::size_t count) {
    std::vector<FatPoint> out;
    std::set<Point> cores;
    while (out.size() < count) {
        FatPoint p = random_fat_point(rng);
        if (cores.insert(p.core).second) out.push_back(p);
    }
    return out;
}

std::vector<Point> enumerate_points(std::size_t max_bits) {
    std::set<Point> points;
    for (std::size_t per_len = 1; per_len <= max_bits; ++per_len) {
        for (std::size_t pre_len = 0; pre_len + per_len <= max_bits; ++pre_len) {
            for (unsigned long long pv = 0; pv < (1ULL << pre_len); ++pv) {
                std::string pre(pre_len, '0');
                for (std::size_t i = 0; i < pre_len; ++i) {
                    pre[i] = ((pv >> (pre_len - 1 - i)) & 1) ? '1' : '0';
                }
                for (unsigned long long qv = 0; qv < (1ULL << per_len); ++qv) {
                    std::string per(per_len, '0');
                    for (std::size_t i = 0; i < per_len; ++i) {
                        per[i] = ((qv >> (per_len - 1 - i)) & 1) ? '1' : '0';
                    }
                    points.insert(Point::make(BitWord{pre}, BitWord{per}));
                }
            }
        }
    }
    return {points.begin(), points.end()};
}

}  // namespace cantor::sampling
