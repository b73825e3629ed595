#pragma once

#include <vector>

#include "peakpoint/geometry.hpp"

namespace pk {

// Cover of open disks with its intersection graph.  Open-set semantics:
// tangent disks do not overlap (strict inequality with a guard band).
class DiskCover {
public:
    explicit DiskCover(std::vector<Disk> disks);

    const std::vector<Disk>& disks() const { return disks_; }
    std::size_t size() const { return disks_.size(); }
    bool overlap(std::size_t i, std::size_t j) const;
    bool covers(std::size_t i, Cx p) const; // open membership with guard

private:
    std::vector<Disk> disks_;
};

struct Chain {
    std::vector<std::size_t> indices;
};

bool is_weak_chain(const DiskCover& cover, const Chain& chain);
bool is_simple_chain(const DiskCover& cover, const Chain& chain);

// Shortest weak chain linking x to y via breadth-first search on the
// intersection graph.  Err::NotLinked when no chain exists.
Chain weak_chain(const DiskCover& cover, Cx x, Cx y);

// Thm 5.4 extraction: splice out (i+1..j-1) for the lexicographically first
// overlapping pair with j-i > 1, repeating to a fixpoint.
Chain simplify_chain(const DiskCover& cover, Chain chain);

} // namespace pk
