#ifndef TROPCOL_EVALUATION_HPP
#define TROPCOL_EVALUATION_HPP

#include "tropcol/errors.hpp"
#include "tropcol/matrix.hpp"
#include "tropcol/splits.hpp"
#include "tropcol/trees.hpp"
#include "tropcol/tropical.hpp"

#include <stdexcept>
#include <vector>

namespace tropcol {

struct not_collinear : std::runtime_error {
	CollinearityVerdict verdict;
	explicit not_collinear(CollinearityVerdict v)
	    : std::runtime_error("configuration is not tropically collinear"), verdict(v) {}
};

enum class BasepointMode { absolute, relative_to_first };

// n marked points of TP^{d-1}. In relative mode point 1 is the zero point
// and the others are positions relative to it.
struct PointConfig {
	std::vector<ProjectivePoint> points;
	BasepointMode basepoint_mode = BasepointMode::absolute;

	int n() const { return int(points.size()); }
	int dim() const { return points.empty() ? 0 : points.front().dim(); }
};

// A marked tropical line: the combinatorial tree with its coloring, plus the
// image of the first marked point. Directions of edges are derived data (the
// sum of e_i over far-side unmarked labels), never stored.
struct MarkedLine {
	Coloring coloring;
	PhyloTree tree;
	ProjectivePoint basepoint;
};

// The d x n matrix of one split: column j is u = sum of e_i with n+i in B
// for j in B, zero for j in A (the part with leaf 1). Zero for singleton and
// non-bicolored splits.
RatMatrix pi_split(const Split& s, const Coloring& c);

// Linear extension over a tree's splits: sum of length * pi_split.
RatMatrix pi_tree(const PhyloTree& t, const Coloring& c);

// Marked-point images: point j = normalize(basepoint + column j of pi_tree).
PointConfig ev_points(const MarkedLine& line);

// Relative coordinates of a configuration: column j = point j - point 1,
// entrywise on canonical representatives. Column 1 is zero.
RatMatrix relative_matrix(const PointConfig& pc, int dim);

// The unique canonical tropical line through a collinear configuration: the
// tree with all splits bicolored and strictly positive lengths whose pi_tree
// matches the relative matrix, with basepoint = point 1. Throws
// not_collinear with the witness minor when the precondition fails.
//
// Implemented as a pruned search over the cones of the collinear complex
// with exact linear algebra. Facet tables per (n, d) are cached; instances
// with more than kCanonicalTreeMaxLeaves leaves are refused.
constexpr int kCanonicalTreeMaxLeaves = 10;
MarkedLine canonical_tree(const PointConfig& pc, int dim);

} // namespace tropcol

#endif
