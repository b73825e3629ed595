#include "peakpoint/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace pk {

namespace {
std::vector<Cx> sample_arcs(const std::vector<CircleArc>& arcs, std::size_t minSamples, double totalLen) {
    const double pitch = totalLen / static_cast<double>(minSamples);
    std::vector<Cx> samples;
    samples.reserve(minSamples + 4 * arcs.size());
    for (const auto& arc : arcs) {
        const int steps = std::max(1, static_cast<int>(std::ceil(arc.length() / pitch)));
        for (int k = 0; k < steps; ++k)
            samples.push_back(arc.point_at(static_cast<double>(k) / steps));
    }
    return samples;
}
} // namespace

JordanCurve::JordanCurve(std::vector<CircleArc> arcs, std::vector<Cx> contacts, std::size_t minSamples)
    : arcs_(std::move(arcs)), contacts_(std::move(contacts)) {
    if (arcs_.empty()) fail(Err::ParameterOutOfRange, "curve needs at least one arc");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Cx endPrev = arcs_[i].end();
        const Cx startNext = arcs_[(i + 1) % arcs_.size()].start();
        if (std::abs(endPrev - startNext) > 1e-9)
            fail(Err::NumericalBreakdown, "curve arcs do not join end to end");
        length_ += arcs_[i].length();
    }
    if (!(length_ > 0.0)) fail(Err::Degenerate, "curve has zero length");
    samples_ = sample_arcs(arcs_, std::max<std::size_t>(minSamples, 1024), length_);
    if (signed_area(samples_) <= 0.0) fail(Err::Degenerate, "curve is not counterclockwise");
    if (!is_simple_at(samples_.size()))
        fail(Err::NumericalBreakdown, "curve self-intersects at sampling resolution");
}

JordanCurve JordanCurve::circle(Cx center, double radius, std::size_t samples) {
    std::vector<CircleArc> arcs;
    arcs.emplace_back(center, radius, 0.0, 2.0 * kPi, Orientation::CCW);
    return JordanCurve(std::move(arcs), {}, samples);
}

bool JordanCurve::is_simple_at(std::size_t sampleCount) const {
    const auto pts = resample(sampleCount);
    const std::size_t n = pts.size();
    const double pitch = length_ / static_cast<double>(n);
    const double bound = pitch / 10.0;
    // grid hash keeps this near-linear
    const double cell = std::max(bound * 4.0, pitch * 2.0);
    auto key = [&](Cx p) {
        return std::make_pair(static_cast<long>(std::floor(p.real() / cell)),
                              static_cast<long>(std::floor(p.imag() / cell)));
    };
    std::vector<std::pair<std::pair<long, long>, std::size_t>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) entries.emplace_back(key(pts[i]), i);
    std::sort(entries.begin(), entries.end());
    auto circDist = [&](std::size_t i, std::size_t j) {
        const std::size_t d = i > j ? i - j : j - i;
        return std::min(d, n - d);
    };
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto [k, i] = entries[e];
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                const auto nk = std::make_pair(k.first + dx, k.second + dy);
                auto it = std::lower_bound(entries.begin(), entries.end(),
                                           std::make_pair(nk, std::size_t(0)));
                for (; it != entries.end() && it->first == nk; ++it) {
                    const std::size_t j = it->second;
                    if (j <= i || circDist(i, j) <= 2) continue;
                    if (std::abs(pts[i] - pts[j]) <= bound) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Cx> JordanCurve::resample(std::size_t count) const {
    return sample_arcs(arcs_, count, length_);
}

} // namespace pk
