#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plength/coset_table.hpp"
#include "plength/presentation.hpp"

namespace plength {

// Combinatorial 2-complex with bigon and triangle faces only.  Face
// boundary words reuse the Letter convention: letter +k / -k traverses edge
// k-1 forward / backward, so Word utilities apply to boundaries too.
struct TwoComplex {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // (source, target)
  std::vector<Word> faces;                 // closed boundary words, length 2 or 3
  std::map<int, std::string> isotropy;     // optional vertex labels

  // Throws std::invalid_argument if edge endpoints or face words are
  // malformed (open boundary path, face length outside {2,3}).
  void validate() const;
};

// Oriented edge path: each entry references an edge with a direction, and
// consecutive entries share endpoints.
struct EdgePath {
  std::vector<Letter> edges;
};

struct ContractResult {
  TwoComplex complex;
  long long dropped_faces = 0;            // faces whose boundary fell below length 2
  std::vector<Word> dropped_face_words;   // their residual words, in surviving-edge numbering
};

// One vertex, one loop edge per generator, one face per relator.  Requires
// every relator to be cyclically reduced of length 2 or 3.
TwoComplex from_presentation(const Presentation& p);

// The degree-d cover encoded by a coset table over a one-vertex complex
// whose edges match the table's generators.  Sheet s of edge e gets id
// e*d + s; faces lift once per sheet (face-major, then sheet order).
TwoComplex cover(const TwoComplex& c, const CosetTable& t);

// Collapses the given edges (indices into c.edges), which must form a
// forest; each resulting vertex is a forest component.  Tree letters are
// deleted from face boundaries; faces left with fewer than 2 edges are
// dropped and reported in the result rather than kept.
ContractResult contract_tree(const TwoComplex& c, const std::vector<int>& tree_edges);

// Attaches one cone per path: a new labeled vertex, one cone edge per
// distinct path vertex, and one triangle per path edge (so a length-k path
// adds exactly k triangles whether or not it closes up).
TwoComplex attach_cones(const TwoComplex& c, const std::vector<EdgePath>& paths,
                        const std::vector<std::string>& labels);

long long euler_char(const TwoComplex& c);

// Faces of c as relators over generators e1..eN, one per edge.  Requires a
// single-vertex complex.
Presentation one_vertex_presentation(const TwoComplex& c);

// 1-skeleton in Graphviz DOT form (edges labeled e<index>).
std::string to_dot(const TwoComplex& c);

// Full complex as JSON: vertex_count, edges as [source,target] pairs, faces
// as arrays of signed 1-based edge references, isotropy as a string map.
std::string to_json_string(const TwoComplex& c);

}  // namespace plength
