#include "lcsk/suffix_array.hpp"

#include <algorithm>

namespace lcsk {

namespace {

using Index = std::int32_t;

std::vector<Index> sa_is(std::span<const Index> s, Index upper) {
    const auto n = static_cast<Index>(s.size());
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {0};
    }
    if (n == 2) {
        return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};
    }

    std::vector<Index> sa(n);
    // true = S-type suffix (smaller than its right neighbour)
    std::vector<bool> is_s(n, false);
    for (Index i = n - 2; i >= 0; --i) {
        is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];
    }

    // Bucket boundaries: sum_l[c] = start of c's bucket, sum_s[c] = start of the S part of c's bucket.
    std::vector<Index> sum_l(upper + 1, 0);
    std::vector<Index> sum_s(upper + 1, 0);
    for (Index i = 0; i < n; ++i) {
        if (!is_s[i]) {
            ++sum_s[s[i]];
        } else {
            ++sum_l[s[i] + 1];
        }
    }
    for (Index c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) {
            sum_l[c + 1] += sum_s[c];
        }
    }

    std::vector<Index> buf(upper + 1);
    auto induce = [&](const std::vector<Index> &lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (auto d : lms) {
            if (d != n) {
                sa[buf[s[d]]++] = d;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (Index t = 0; t < n; ++t) {
            const Index v = sa[t];
            if (v >= 1 && !is_s[v - 1]) {
                sa[buf[s[v - 1]]++] = v - 1;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (Index t = n - 1; t >= 0; --t) {
            const Index v = sa[t];
            if (v >= 1 && is_s[v - 1]) {
                sa[--buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    std::vector<Index> lms_map(n + 1, -1);
    std::vector<Index> lms;
    for (Index i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_map[i] = static_cast<Index>(lms.size());
            lms.push_back(i);
        }
    }
    const auto lms_count = static_cast<Index>(lms.size());

    induce(lms);

    if (lms_count > 0) {
        std::vector<Index> sorted_lms;
        sorted_lms.reserve(lms_count);
        for (auto v : sa) {
            if (lms_map[v] != -1) {
                sorted_lms.push_back(v);
            }
        }
        // Name LMS substrings; equal substrings share a name.
        std::vector<Index> reduced(lms_count);
        Index name = 0;
        reduced[lms_map[sorted_lms[0]]] = 0;
        for (Index t = 1; t < lms_count; ++t) {
            Index l = sorted_lms[t - 1];
            Index r = sorted_lms[t];
            const Index end_l = lms_map[l] + 1 < lms_count ? lms[lms_map[l] + 1] : n;
            const Index end_r = lms_map[r] + 1 < lms_count ? lms[lms_map[r] + 1] : n;
            bool same = end_l - l == end_r - r;
            if (same) {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r]) {
                    same = false;
                }
            }
            if (!same) {
                ++name;
            }
            reduced[lms_map[sorted_lms[t]]] = name;
        }

        const auto reduced_sa = sa_is(reduced, name);
        for (Index t = 0; t < lms_count; ++t) {
            sorted_lms[t] = lms[reduced_sa[t]];
        }
        induce(sorted_lms);
    }
    return sa;
}

} // namespace

std::vector<std::int32_t> build_suffix_array(std::span<const std::int32_t> text, std::int32_t upper) {
    return sa_is(text, upper);
}

std::vector<std::int32_t> build_lcp(std::span<const std::int32_t> text, std::span<const std::int32_t> sa) {
    const auto n = static_cast<Index>(text.size());
    std::vector<Index> rank(n);
    for (Index t = 0; t < n; ++t) {
        rank[sa[t]] = t;
    }
    std::vector<Index> lcp(n, 0);
    Index h = 0;
    for (Index i = 0; i < n; ++i) {
        if (h > 0) {
            --h;
        }
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const Index j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
            ++h;
        }
        lcp[rank[i]] = h;
    }
    return lcp;
}

} // namespace lcsk
