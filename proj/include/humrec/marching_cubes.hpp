#pragma once

#include "humrec/mesh.hpp"
#include "humrec/scalar_grid.hpp"

namespace humrec {

namespace mc_tables {
// Standard 15-case marching cubes triangulation table, 256 configurations,
// -1 terminated edge index triples. Edge/vertex numbering follows the usual
// polygonise layout (vertices 0-3 on the k slice, 4-7 on k+1).
extern const signed char kTriTable[256][16];

// Edges cut by each configuration, derived from corner signs.
int edge_mask(int config);

// Cube edge -> (corner a, corner b).
extern const int kEdgeCorners[12][2];
// Cube corner -> (di, dj, dk) offset.
extern const int kCornerOffset[8][3];
}  // namespace mc_tables

// Extracts the iso-surface with triangles oriented so normals point toward
// larger field values. A corner exactly at the iso value counts as outside
// (fixed tie-breaking). Shared edge vertices are welded, so the output is
// manifold wherever the field is.
TriangleMesh marching_cubes(const ScalarGrid& grid, float iso);

}  // namespace humrec
