#include "artifact/index.hpp"

#include "artifact/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace artifact {

namespace {

std::string params_str(int s, int p, int n) {
    return "(s,p,n)=(" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParamError(msg);
}

IndexTuple band(int hi, int lo) {
    IndexTuple t;
    for (int x = hi; x >= lo; --x) t.push_back(x);
    return t;
}

}  // namespace

void validate(const GrassParams& g) {
    require(g.p > 0 && g.p < g.n, "need 0 < p < n for " + params_str(g.s, g.p, g.n));
    require(g.s > 0 && g.s < g.n, "need 0 < s < n for " + params_str(g.s, g.p, g.n));
}

std::string to_string(const IndexTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

int rank(int s, int p, int n) {
    validate({s, p, n});
    return std::min({s, n - s, p, n - p});
}

std::vector<IndexTuple> enumerate_full(int p, int n) {
    require(p > 0 && p < n, "enumerate_full: need 0 < p < n");
    // Lexicographic order on decreasing tuples: first entry ascending, then the rest.
    std::vector<IndexTuple> out;
    IndexTuple cur;
    std::function<void(int, int)> rec = [&](int left, int maxv) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = left; v <= maxv; ++v) {
            cur.push_back(v);
            rec(left - 1, v - 1);
            cur.pop_back();
        }
    };
    rec(p, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexTuple> enumerate_stratum(int s, int p, int n, int k) {
    validate({s, p, n});
    require(k >= 0 && k <= p, "stratum index k=" + std::to_string(k) + " outside [0,p]");
    std::vector<IndexTuple> out;
    for (auto& t : enumerate_full(p, n))
        if (stratum_of(t, s) == k) out.push_back(std::move(t));
    return out;
}

long stratum_dimension(int s, int p, int n, int k) {
    return static_cast<long>(enumerate_stratum(s, p, n, k).size()) - 1;
}

int stratum_of(const IndexTuple& t, int s) {
    return static_cast<int>(std::count_if(t.begin(), t.end(), [s](int x) { return x > s; }));
}

bool is_decreasing(const IndexTuple& t, int n) {
    if (t.empty() || t.front() > n || t.back() < 1) return false;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] >= t[i - 1]) return false;
    return true;
}

bool partition_check(int s, int p, int n) {
    validate({s, p, n});
    std::set<IndexTuple> seen;
    std::size_t total = 0;
    for (int k = 0; k <= p; ++k)
        for (auto& t : enumerate_stratum(s, p, n, k)) {
            if (!is_decreasing(t, n)) return false;
            ++total;
            seen.insert(t);
        }
    auto full = enumerate_full(p, n);
    return total == seen.size() && seen == std::set<IndexTuple>(full.begin(), full.end());
}

IndexTuple index_I(int s, int p, int n, int k) {
    validate({s, p, n});
    require(k >= 0 && k <= p && s - p + k >= 0 && s + k <= n,
            "I_k undefined for k=" + std::to_string(k) + " at " + params_str(s, p, n));
    return band(s + k, s - p + k + 1);
}

IndexTuple index_I_star(int s, int p, int n, int k) {
    validate({s, p, n});
    require(k >= 1 && k <= p - 1 && s - p + k >= 1 && s + k + 1 <= n,
            "I*_k undefined for k=" + std::to_string(k) + " at " + params_str(s, p, n));
    IndexTuple t{s + k + 1};
    for (int x = s + k - 1; x >= s - p + k + 2; --x) t.push_back(x);
    t.push_back(s - p + k);
    return t;
}

IndexTuple index_I_mu_nu(int s, int p, int n, int k, int mu, int nu) {
    IndexTuple base = index_I(s, p, n, k);
    require(mu >= s - p + k + 1 && mu <= s, "I^k_{mu nu}: mu=" + std::to_string(mu) + " out of range");
    require(nu >= 1 && nu <= s - p + k, "I^k_{mu nu}: nu=" + std::to_string(nu) + " out of range");
    IndexTuple t;
    for (int x : base)
        if (x != mu) t.push_back(x);
    t.push_back(nu);
    return t;
}

IndexTuple index_I_star_mu_nu(int s, int p, int n, int k, int mu, int nu) {
    IndexTuple base = index_I(s, p, n, k);
    require(mu >= s + 1 && mu <= s + k, "I^{k*}_{mu nu}: mu=" + std::to_string(mu) + " out of range");
    require(nu >= s + k + 1 && nu <= n, "I^{k*}_{mu nu}: nu=" + std::to_string(nu) + " out of range");
    IndexTuple t{nu};
    for (int x : base)
        if (x != mu) t.push_back(x);
    return t;
}

}  // namespace artifact
