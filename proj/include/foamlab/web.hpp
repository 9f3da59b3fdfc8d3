#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foamlab/poly.hpp"

namespace foamlab {

// A web edge. Circles have no endpoints and carry an orientation (+1 ccw, -1 cw).
struct Edge {
    int thickness = 1;
    int tail = -1;
    int head = -1;
    int orient = 1;
    bool is_circle() const { return tail < 0; }
};

enum class VertexKind { Split, Merge };

// Planar cyclic order (counterclockwise): merge (thick, thin1, thin2), split (thick, thin2, thin1).
// thin1 is the left thin edge when the flow points up.
struct Vertex {
    VertexKind kind = VertexKind::Merge;
    int thick = -1;
    int thin1 = -1;
    int thin2 = -1;
};

struct Web {
    std::map<int, Edge> edges;
    std::map<int, Vertex> vertices;

    bool empty() const { return edges.empty() && vertices.empty(); }
    int fresh_edge_id() const { return edges.empty() ? 0 : edges.rbegin()->first + 1; }
    int fresh_vertex_id() const { return vertices.empty() ? 0 : vertices.rbegin()->first + 1; }
    const Edge& edge(int id) const;
    const Vertex& vertex(int id) const;
    bool operator==(const Web& o) const;
};

struct WebDiagnostic {
    bool ok = true;
    ErrorKind kind = ErrorKind::InvalidWeb;
    std::string message;
};

WebDiagnostic validate_web(const Web& w);
// Throws the diagnostic as an Error.
void require_valid(const Web& w);

// Face tracing on the non-circle part. Dart 2e runs tail->head, 2e+1 the other way;
// the face of a dart is the face on its left.
std::map<int, int> trace_faces(const Web& w, int* face_count = nullptr);

// Isomorphism of webs respecting thickness, vertex kinds and thin order. Returns an edge map
// from a's ids to b's ids. Circles of equal thickness are matched in id order.
std::optional<std::map<int, int>> web_isomorphism(const Web& a, const Web& b);

enum class MoveKind { Isotopy, Decorate, Assoc, Coassoc, DigonCup, DigonCap, Zip, Unzip, Cup, Cap, Saddle };

std::string move_name(MoveKind k);

// One basic foam. Edge references are ids in the current slice.
struct BasicMove {
    MoveKind kind = MoveKind::Isotopy;
    int a = 0, b = 0;
    int e1 = -1, e2 = -1;
    int orient = 1;   // orientation of the circle created by a cup
    MultiPoly poly;   // decoration (generator variables)
};

// consumed/created edge lists are in matching order for a move and its mirror.
struct MoveResult {
    Web web;
    std::vector<int> consumed;
    std::vector<int> created;
    std::vector<int> removed_vertices;
    std::vector<int> created_vertices;
};

MoveResult apply_move(const Web& w, const BasicMove& m);

// Cup<->Cap, DigonCup<->DigonCap, Zip<->Unzip, Assoc<->Coassoc; the rest are self-dual.
MoveKind mirror_kind(MoveKind k);

}  // namespace foamlab
