#include "peakpoint/chains.hpp"

#include <deque>

namespace pk {

namespace {
constexpr double kGuard = 1e-12;
}

DiskCover::DiskCover(std::vector<Disk> disks) : disks_(std::move(disks)) {
    if (disks_.empty()) fail(Err::ParameterOutOfRange, "cover needs at least one disk");
}

bool DiskCover::overlap(std::size_t i, std::size_t j) const {
    const Disk& a = disks_[i];
    const Disk& b = disks_[j];
    return std::abs(a.center - b.center) < a.radius + b.radius - kGuard;
}

bool DiskCover::covers(std::size_t i, Cx p) const {
    return std::abs(p - disks_[i].center) < disks_[i].radius - kGuard;
}

bool is_weak_chain(const DiskCover& cover, const Chain& chain) {
    if (chain.indices.empty()) return false;
    for (std::size_t k = 0; k + 1 < chain.indices.size(); ++k)
        if (!cover.overlap(chain.indices[k], chain.indices[k + 1])) return false;
    return true;
}

bool is_simple_chain(const DiskCover& cover, const Chain& chain) {
    const auto& idx = chain.indices;
    if (idx.empty()) return false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            const bool want = (j - i) <= 1;
            if (cover.overlap(idx[i], idx[j]) != want) return false;
        }
    }
    return true;
}

Chain weak_chain(const DiskCover& cover, Cx x, Cx y) {
    const std::size_t n = cover.size();
    std::vector<int> parent(n, -2); // -2 unseen, -1 root
    std::deque<std::size_t> queue;
    bool anyStart = false, anyGoal = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (cover.covers(i, x)) {
            parent[i] = -1;
            queue.push_back(i);
            anyStart = true;
        }
        if (cover.covers(i, y)) anyGoal = true;
    }
    if (!anyStart || !anyGoal)
        fail(Err::ParameterOutOfRange, "weak_chain endpoints must be covered");

    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (cover.covers(cur, y)) {
            Chain out;
            for (int at = static_cast<int>(cur); at != -1; at = parent[at])
                out.indices.push_back(static_cast<std::size_t>(at));
            std::reverse(out.indices.begin(), out.indices.end());
            return out;
        }
        for (std::size_t next = 0; next < n; ++next) {
            if (parent[next] != -2 || next == cur) continue;
            if (!cover.overlap(cur, next)) continue;
            parent[next] = static_cast<int>(cur);
            queue.push_back(next);
        }
    }
    fail(Err::NotLinked, "cover does not link the given points");
}

Chain simplify_chain(const DiskCover& cover, Chain chain) {
    if (!is_weak_chain(cover, chain)) fail(Err::NotWeakChain, "simplify_chain needs a weak chain");
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& idx = chain.indices;
        for (std::size_t i = 0; i < idx.size() && !changed; ++i) {
            // largest j for this i, so one splice removes the most
            for (std::size_t j = idx.size(); j-- > i + 2;) {
                if (cover.overlap(idx[i], idx[j])) {
                    chain.indices.erase(chain.indices.begin() + static_cast<long>(i) + 1,
                                        chain.indices.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
    return chain;
}

} // namespace pk
