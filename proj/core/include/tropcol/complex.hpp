#ifndef TROPCOL_COMPLEX_HPP
#define TROPCOL_COMPLEX_HPP

#include "tropcol/errors.hpp"
#include "tropcol/splits.hpp"
#include "tropcol/trees.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropcol {

struct complex_not_pure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Fixed-width bitset over vertex indices of one complex.
class VertexSet {
public:
	VertexSet() = default;
	explicit VertexSet(int bits) : words_((bits + 63) / 64, 0) {}

	void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
	void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
	bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
	int count() const;
	bool empty() const;
	bool subset_of(const VertexSet& other) const;
	bool intersects(const VertexSet& other) const;
	VertexSet and_not(const VertexSet& other) const;
	VertexSet intersect(const VertexSet& other) const;
	std::vector<int> indices() const;
	int first() const; // -1 when empty

	friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
	std::vector<std::uint64_t> words_;
};

// The flag simplicial complex on bicolored non-singleton splits of [n+d];
// faces are the pairwise-compatible subsets. Vertices are kept in canonical
// lexicographic order, which also orients the boundary matrices.
struct CollinearComplex {
	Coloring coloring;
	std::vector<Split> vertices;
	std::vector<VertexSet> adjacency; // compatibility relation, no self-loops

	int vertex_count() const { return int(vertices.size()); }
	bool empty() const { return vertices.empty(); }
	int facet_dimension() const { return coloring.leaf_count() - 4; }
	std::optional<int> vertex_index(const Split& s) const;
};

CollinearComplex build_complex(const Coloring& c);

// Faces of one dimension, each an ascending vertex-index tuple in
// lexicographic order.
std::vector<std::vector<int>> faces_of_dimension(const CollinearComplex& cx, int dim);

// Face counts by dimension, up to the top nonempty one. A nonnegative
// max_total aborts the count with resource_cap_exceeded as soon as the
// running total passes it.
std::vector<std::int64_t> face_vector(const CollinearComplex& cx, std::int64_t max_total = -1);

// All maximal faces (maximal cliques of the compatibility graph), as vertex
// sets, in no particular order.
std::vector<VertexSet> maximal_faces(const CollinearComplex& cx);

// Facets as trees, ascending in the recursive tree order.
std::vector<PhyloTree> sort_facets(const Coloring& c);

struct ShellingCounterexample {
	int earlier;  // index into order
	int later;
};

struct ShellingReport {
	Coloring coloring;
	std::vector<PhyloTree> order;
	// restriction[i] = vertices x of facet i such that some earlier facet
	// contains facet_i minus x; equals the whole facet for the homology
	// facets
	std::vector<std::vector<Split>> restrictions;
	bool verified = false;
	std::optional<ShellingCounterexample> counterexample;
};

// Checks the three-condition shelling definition for an arbitrary candidate
// order: for every pair C' < C there are C'' < C and x in C with x not in
// C' and C minus x inside C''. Requires the complex to be pure and the order
// to be a permutation of its facets.
ShellingReport verify_shelling(const CollinearComplex& cx, const std::vector<PhyloTree>& order);

// The facets whose restriction set is the whole facet; their count is the
// rank of the top homology.
std::vector<PhyloTree> homology_facets(const ShellingReport& report);

} // namespace tropcol

#endif
