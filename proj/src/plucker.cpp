#include "artifact/plucker.hpp"

#include "artifact/errors.hpp"
#include "artifact/parallel.hpp"

#include <algorithm>

namespace artifact {

bool PluckerVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const auto& kv) { return kv.second == 0; });
}

const Rat& PluckerVector::at(const IndexTuple& t) const {
    auto it = coords.find(t);
    if (it == coords.end()) throw ParamError("no Plucker coordinate " + to_string(t));
    return it->second;
}

Rat minor(const RatMatrix& m, const IndexTuple& t) {
    if (static_cast<int>(t.size()) != m.rows()) throw ParamError("index length differs from row count");
    std::vector<int> cols(t.begin(), t.end());
    std::sort(cols.begin(), cols.end());
    for (int& c : cols) {
        if (c < 1 || c > m.cols()) throw ParamError("column index out of range in " + to_string(t));
        --c;
    }
    return det(m.select_columns(cols));
}

PluckerVector plucker_vector(const RatMatrix& m) {
    PluckerVector v{m.rows(), m.cols(), {}};
    if (m.rows() <= 0 || m.rows() >= m.cols()) throw ParamError("matrix must be p x n with 0 < p < n");
    auto tuples = enumerate_full(m.rows(), m.cols());
    std::vector<Rat> vals(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t i) { vals[i] = minor(m, tuples[i]); });
    for (std::size_t i = 0; i < tuples.size(); ++i) v.coords.emplace(tuples[i], vals[i]);
    return v;
}

Coords project_stratum(const PluckerVector& v, int s, int k) {
    if (k < 0 || k > v.p) throw ParamError("stratum index outside [0,p]");
    Coords out;
    for (const auto& [t, x] : v.coords)
        if (stratum_of(t, s) == k) out.emplace(t, x);
    return out;
}

Coords normalize(const Coords& c) {
    Coords out = c;
    for (const auto& [t, x] : c)
        if (x != 0) {
            Rat lead = x;
            for (auto& kv : out) kv.second /= lead;
            break;
        }
    return out;
}

bool proportional(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) return false;
    return normalize(a) == normalize(b);
}

BlowupPoint blowup_map(const RatMatrix& m, int s) {
    validate({s, m.rows(), m.cols()});
    PluckerVector v = plucker_vector(m);
    if (v.is_zero()) throw ParamError("rank-deficient matrix: Plucker vector vanishes");
    BlowupPoint out{normalize(v.coords), {}};
    for (int k = 0; k <= v.p; ++k) {
        Coords c = project_stratum(v, s, k);
        bool zero = std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second == 0; });
        if (!c.empty() && zero)
            throw ParamError("outside domain of the blow-up map: stratum k=" + std::to_string(k) + " vanishes");
        out.strata.push_back(normalize(c));
    }
    return out;
}

}  // namespace artifact
