#include "humrec/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace humrec {

bool ray_triangle(const Vec3f& origin, const Vec3f& dir, const Vec3f& a, const Vec3f& b,
                  const Vec3f& c, float& t, float& u, float& v) {
  const Vec3d o = origin.cast<double>(), d = dir.cast<double>();
  const Vec3d e1 = (b - a).cast<double>(), e2 = (c - a).cast<double>();
  const Vec3d pvec = d.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < 1e-12) return false;
  const double inv_det = 1.0 / det;
  const Vec3d tvec = o - a.cast<double>();
  const double uu = tvec.dot(pvec) * inv_det;
  if (uu < 0.0 || uu > 1.0) return false;
  const Vec3d qvec = tvec.cross(e1);
  const double vv = d.dot(qvec) * inv_det;
  if (vv < 0.0 || uu + vv > 1.0) return false;
  const double tt = e2.dot(qvec) * inv_det;
  t = static_cast<float>(tt);
  u = static_cast<float>(uu);
  v = static_cast<float>(vv);
  return true;
}

double point_triangle_dist2(const Vec3d& p, const Vec3d& a, const Vec3d& b, const Vec3d& c,
                            Vec3d* closest) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  const Vec3d ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  Vec3d q;
  if (d1 <= 0.0 && d2 <= 0.0) {
    q = a;
  } else {
    const Vec3d bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) {
      q = b;
    } else {
      const double vc = d1 * d4 - d3 * d2;
      if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        q = a + (d1 / (d1 - d3)) * ab;
      } else {
        const Vec3d cp = p - c;
        const double d5 = ab.dot(cp), d6 = ac.dot(cp);
        if (d6 >= 0.0 && d5 <= d6) {
          q = c;
        } else {
          const double vb = d5 * d2 - d1 * d6;
          if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
            q = a + (d2 / (d2 - d6)) * ac;
          } else {
            const double va = d3 * d6 - d5 * d4;
            if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
              q = b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
            } else {
              const double denom = 1.0 / (va + vb + vc);
              q = a + ab * (vb * denom) + ac * (vc * denom);
            }
          }
        }
      }
    }
  }
  if (closest) *closest = q;
  return (p - q).squaredNorm();
}

namespace {

inline bool ray_box(const Vec3f& origin, const Vec3f& inv_dir, const Vec3f& lo, const Vec3f& hi) {
  float t0 = -std::numeric_limits<float>::max();
  float t1 = std::numeric_limits<float>::max();
  for (int k = 0; k < 3; ++k) {
    if (std::isinf(inv_dir[k])) {
      if (origin[k] < lo[k] || origin[k] > hi[k]) return false;
      continue;
    }
    float a = (lo[k] - origin[k]) * inv_dir[k];
    float b = (hi[k] - origin[k]) * inv_dir[k];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  return t1 >= t0;
}

inline double box_dist2(const Vec3f& p, const Vec3f& lo, const Vec3f& hi) {
  double d2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double d = p[k] < lo[k] ? lo[k] - p[k] : (p[k] > hi[k] ? p[k] - hi[k] : 0.0);
    d2 += d * d;
  }
  return d2;
}

}  // namespace

Bvh::Bvh(const TriangleMesh& mesh) : mesh_(mesh) {
  const int n = static_cast<int>(mesh.triangle_count());
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  if (n == 0) return;
  std::vector<Vec3f> centers(n);
  for (int t = 0; t < n; ++t) {
    const auto& tri = mesh.triangles[t];
    centers[t] =
        (mesh.vertices[tri[0]] + mesh.vertices[tri[1]] + mesh.vertices[tri[2]]) / 3.0f;
  }
  nodes_.reserve(static_cast<size_t>(2 * n));
  build(0, n, centers);
}

int Bvh::build(int first, int count, std::vector<Vec3f>& centers) {
  const int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  Vec3f lo = Vec3f::Constant(std::numeric_limits<float>::max());
  Vec3f hi = Vec3f::Constant(std::numeric_limits<float>::lowest());
  for (int i = first; i < first + count; ++i) {
    const auto& tri = mesh_.triangles[order_[i]];
    for (int k = 0; k < 3; ++k) {
      lo = lo.cwiseMin(mesh_.vertices[tri[k]]);
      hi = hi.cwiseMax(mesh_.vertices[tri[k]]);
    }
  }
  nodes_[idx].lo = lo;
  nodes_[idx].hi = hi;
  if (count <= 4) {
    nodes_[idx].first = first;
    nodes_[idx].count = count;
    return idx;
  }
  const Vec3f ext = hi - lo;
  int axis = 0;
  if (ext.y() > ext.x()) axis = 1;
  if (ext.z() > ext[axis]) axis = 2;
  const int mid = first + count / 2;
  std::nth_element(order_.begin() + first, order_.begin() + mid, order_.begin() + first + count,
                   [&](uint32_t a, uint32_t b) { return centers[a][axis] < centers[b][axis]; });
  const int l = build(first, mid - first, centers);
  const int r = build(mid, first + count - mid, centers);
  nodes_[idx].left = l;
  nodes_[idx].right = r;
  nodes_[idx].count = 0;
  return idx;
}

RayHit Bvh::closest_hit(const Vec3f& origin, const Vec3f& dir, float t_min) const {
  RayHit front, back;
  double_sided_hit(origin, dir, front, back, t_min);
  return front;
}

void Bvh::double_sided_hit(const Vec3f& origin, const Vec3f& dir, RayHit& front, RayHit& back,
                           float t_min) const {
  front = RayHit{};
  back = RayHit{};
  back.t = -std::numeric_limits<float>::max();
  if (nodes_.empty()) return;
  const Vec3f inv_dir = dir.cwiseInverse();
  int stack[64];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    if (!ray_box(origin, inv_dir, node.lo, node.hi)) continue;
    if (node.is_leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const uint32_t t = order_[i];
        const auto& tri = mesh_.triangles[t];
        float tt, u, v;
        if (!ray_triangle(origin, dir, mesh_.vertices[tri[0]], mesh_.vertices[tri[1]],
                          mesh_.vertices[tri[2]], tt, u, v))
          continue;
        if (tt <= t_min) continue;
        if (tt < front.t) front = {tt, t, u, v, true};
        if (tt > back.t) back = {tt, t, u, v, true};
      }
    } else {
      stack[sp++] = node.left;
      stack[sp++] = node.right;
    }
  }
  if (!front.valid) back = RayHit{};
}

void Bvh::all_hits(const Vec3f& origin, const Vec3f& dir, std::vector<RayHit>& hits,
                   float t_min) const {
  hits.clear();
  if (nodes_.empty()) return;
  const Vec3f inv_dir = dir.cwiseInverse();
  int stack[64];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[stack[--sp]];
    if (!ray_box(origin, inv_dir, node.lo, node.hi)) continue;
    if (node.is_leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const uint32_t t = order_[i];
        const auto& tri = mesh_.triangles[t];
        float tt, u, v;
        if (ray_triangle(origin, dir, mesh_.vertices[tri[0]], mesh_.vertices[tri[1]],
                         mesh_.vertices[tri[2]], tt, u, v) &&
            tt > t_min)
          hits.push_back({tt, t, u, v, true});
      }
    } else {
      stack[sp++] = node.left;
      stack[sp++] = node.right;
    }
  }
}

double Bvh::closest_point(const Vec3f& query, Vec3f& point, uint32_t& triangle) const {
  double best = std::numeric_limits<double>::max();
  if (nodes_.empty()) return best;
  const Vec3d q = query.cast<double>();
  using Entry = std::pair<double, int>;  // (box distance^2, node)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.push({box_dist2(query, nodes_[0].lo, nodes_[0].hi), 0});
  while (!heap.empty()) {
    const auto [d2, ni] = heap.top();
    heap.pop();
    if (d2 >= best) break;
    const Node& node = nodes_[ni];
    if (node.is_leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const uint32_t t = order_[i];
        const auto& tri = mesh_.triangles[t];
        Vec3d cp;
        const double dd = point_triangle_dist2(q, mesh_.vertices[tri[0]].cast<double>(),
                                               mesh_.vertices[tri[1]].cast<double>(),
                                               mesh_.vertices[tri[2]].cast<double>(), &cp);
        if (dd < best) {
          best = dd;
          point = cp.cast<float>();
          triangle = t;
        }
      }
    } else {
      heap.push({box_dist2(query, nodes_[node.left].lo, nodes_[node.left].hi), node.left});
      heap.push({box_dist2(query, nodes_[node.right].lo, nodes_[node.right].hi), node.right});
    }
  }
  return best;
}

}  // namespace humrec
