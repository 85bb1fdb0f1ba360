#include "ksys/partition.hpp"

#include <numeric>
#include <sstream>

#include "ksys/error.hpp"

namespace ksys {

namespace {
void gen(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    return out;
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

Partition conjugate_partition(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int i = 1; i <= p[0]; ++i) {
        int cnt = 0;
        for (int part : p)
            if (part >= i) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

long n_stat(const Partition& p) {
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
    return s;
}

std::string partition_name(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            p.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(Errc::invalid_input, "malformed partition: '" + s + "'");
        }
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        KSYS_REQUIRE(p[i] >= p[i + 1], Errc::invalid_input, "partition parts must be decreasing");
    KSYS_REQUIRE(!p.empty() && p.back() >= 1, Errc::invalid_input, "partition parts must be positive");
    return p;
}

}  // namespace ksys
