#include "bei/rank.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace bei {

namespace {

using Int = boost::multiprecision::cpp_int;
using Row = std::vector<std::pair<int, Int>>;  // sorted by column

void strip_content(Row& r) {
    Int g = 0;
    for (auto& [c, v] : r) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : r) v /= g;
    if (!r.empty() && r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
}

// r := pivot_lead * r - r_lead * pivot, which clears the leading column of r.
Row eliminate(const Row& r, const Row& pivot) {
    const Int& a = r.front().second;        // leading value of r
    const Int& b = pivot.front().second;    // leading value of pivot (same column)
    Row out;
    out.reserve(r.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
            out.emplace_back(r[i].first, b * r[i].second);
            ++i;
        } else if (i >= r.size() || pivot[j].first < r[i].first) {
            out.emplace_back(pivot[j].first, -a * pivot[j].second);
            ++j;
        } else {
            Int v = b * r[i].second - a * pivot[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    strip_content(out);
    return out;
}

int rank_char0(const std::vector<SparseIntRow>& rows) {
    std::map<int, Row> pivots;  // leading column -> reduced row
    int rank = 0;
    for (const SparseIntRow& raw : rows) {
        Row r;
        r.reserve(raw.size());
        for (auto [c, v] : raw)
            if (v != 0) r.emplace_back(c, Int(v));
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        strip_content(r);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            r = eliminate(r, it->second);
        }
        if (!r.empty()) {
            pivots.emplace(r.front().first, std::move(r));
            ++rank;
        }
    }
    return rank;
}

long long mod_pow(long long base, long long exp, long long p) {
    long long acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) acc = (__int128)acc * base % p;
        base = (__int128)base * base % p;
        exp >>= 1;
    }
    return acc;
}

int rank_mod_p(const std::vector<SparseIntRow>& rows, long long p) {
    std::map<int, std::vector<std::pair<int, long long>>> pivots;
    int rank = 0;
    for (const SparseIntRow& raw : rows) {
        std::vector<std::pair<int, long long>> r;
        for (auto [c, v] : raw) {
            long long m = v % p;
            if (m < 0) m += p;
            if (m) r.emplace_back(c, m);
        }
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            // r -= (lead(r) / lead(pivot)) * pivot
            long long factor =
                (__int128)r.front().second * mod_pow(it->second.front().second, p - 2, p) % p;
            std::vector<std::pair<int, long long>> out;
            std::size_t i = 0, j = 0;
            const auto& piv = it->second;
            while (i < r.size() || j < piv.size()) {
                if (j >= piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                    out.push_back(r[i++]);
                } else if (i >= r.size() || piv[j].first < r[i].first) {
                    long long v = (p - (__int128)factor * piv[j].second % p) % p;
                    if (v) out.emplace_back(piv[j].first, v);
                    ++j;
                } else {
                    long long v = (r[i].second - (__int128)factor * piv[j].second % p + p) % p;
                    if (v) out.emplace_back(r[i].first, v);
                    ++i;
                    ++j;
                }
            }
            r = std::move(out);
        }
        if (!r.empty()) {
            pivots.emplace(r.front().first, std::move(r));
            ++rank;
        }
    }
    return rank;
}

}  // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int sparse_rank(const std::vector<SparseIntRow>& rows, long field_char) {
    if (field_char == 0) return rank_char0(rows);
    if (field_char < 2 || field_char >= (1L << 31) || !is_prime(field_char))
        throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31");
    return rank_mod_p(rows, field_char);
}

}  // namespace bei
