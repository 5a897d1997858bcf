#include "marching.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace oracle {
namespace {

struct Dsu {
  std::vector<int> p;
  int add() {
    p.push_back(static_cast<int>(p.size()));
    return p.back();
  }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

MarchingResult marching_squares(const Field& f, double x0, double x1, double y0, double y1, int n,
                                const std::vector<Disk>& disks) {
  const double off = 0.37;
  const double hx = (x1 - x0) / n;
  const double hy = (y1 - y0) / n;
  auto X = [&](int i) { return x0 + (i + off) * hx; };
  auto Y = [&](int j) { return y0 + (j + off) * hy; };
  const int m = n - 1;  // nodes 0..m-1 per axis fit inside the box
  std::vector<double> val(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) val[static_cast<std::size_t>(i * m + j)] = f(X(i), Y(j));
  }
  auto pos = [&](int i, int j) { return val[static_cast<std::size_t>(i * m + j)] > 0; };

  // Cells inside a disk are dropped; their crossing nodes are merged into the disk node.
  auto disk_of = [&](int i, int j) {
    double cx = X(i) + hx / 2, cy = Y(j) + hy / 2;
    for (std::size_t k = 0; k < disks.size(); ++k) {
      if (std::abs(cx - disks[k].x) <= disks[k].radius_cells * hx && std::abs(cy - disks[k].y) <= disks[k].radius_cells * hy) {
        return static_cast<int>(k);
      }
    }
    return -1;
  };

  // Crossing nodes keyed by grid edge: (i, j, dir) with dir 0 horizontal, 1 vertical.
  std::map<std::tuple<int, int, int>, int> node;
  Dsu dsu;
  auto crossing = [&](int i, int j, int dir) {
    auto key = std::make_tuple(i, j, dir);
    auto it = node.find(key);
    if (it != node.end()) return it->second;
    int id = dsu.add();
    node.emplace(key, id);
    return id;
  };
  std::vector<int> disk_node;
  for (std::size_t k = 0; k < disks.size(); ++k) disk_node.push_back(dsu.add());
  std::vector<std::set<int>> disk_edges(disks.size());

  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j + 1 < m; ++j) {
      bool a = pos(i, j), b = pos(i + 1, j), c = pos(i + 1, j + 1), d = pos(i, j + 1);
      // edges: bottom (i,j,0), right (i+1,j,1), top (i,j+1,0), left (i,j,1)
      std::vector<int> cross;
      if (a != b) cross.push_back(crossing(i, j, 0));
      if (b != c) cross.push_back(crossing(i + 1, j, 1));
      if (c != d) cross.push_back(crossing(i, j + 1, 0));
      if (d != a) cross.push_back(crossing(i, j, 1));
      int k = disk_of(i, j);
      if (k >= 0) {
        for (int x : cross) disk_edges[static_cast<std::size_t>(k)].insert(x);
        continue;
      }
      if (cross.size() == 2) {
        segs.emplace_back(cross[0], cross[1]);
      } else if (cross.size() == 4) {
        bool centre = f(X(i) + hx / 2, Y(j) + hy / 2) > 0;
        // cross order: bottom, right, top, left
        if (centre == a) {
          segs.emplace_back(cross[0], cross[1]);
          segs.emplace_back(cross[2], cross[3]);
        } else {
          segs.emplace_back(cross[0], cross[3]);
          segs.emplace_back(cross[1], cross[2]);
        }
      }
    }
  }
  MarchingResult res;
  // A crossing node on a dropped cell that is also used by a kept cell is a branch leaving the disk.
  std::set<int> used;
  for (auto [p, q] : segs) {
    used.insert(p);
    used.insert(q);
  }
  for (std::size_t k = 0; k < disks.size(); ++k) {
    int deg = 0;
    for (int x : disk_edges[k]) {
      if (used.count(x)) {
        ++deg;
        dsu.unite(x, disk_node[k]);
      }
    }
    res.disk_degrees.push_back(deg);
  }
  for (auto [p, q] : segs) dsu.unite(p, q);
  // Graph vertices: used crossing nodes, with each disk's boundary crossings merged into one.
  std::set<int> graph_nodes, roots;
  for (auto [p, q] : segs) {
    graph_nodes.insert(p);
    graph_nodes.insert(q);
  }
  int absorbed = 0;
  for (std::size_t k = 0; k < disks.size(); ++k) absorbed += res.disk_degrees[k] > 0 ? res.disk_degrees[k] - 1 : 0;
  int V = static_cast<int>(graph_nodes.size()) - absorbed;
  int E = static_cast<int>(segs.size());
  for (int x : graph_nodes) roots.insert(dsu.find(x));
  res.components = static_cast<int>(roots.size());
  res.cycle_rank = E - V + res.components;
  return res;
}

int local_degree(const Field& f, double x, double y, double rx, double ry, int samples_per_side) {
  std::vector<double> vals;
  auto side = [&](double ax, double ay, double bx, double by) {
    for (int k = 0; k < samples_per_side; ++k) {
      double s = static_cast<double>(k) / samples_per_side;
      vals.push_back(f(ax + s * (bx - ax), ay + s * (by - ay)));
    }
  };
  side(x - rx, y - ry, x + rx, y - ry);
  side(x + rx, y - ry, x + rx, y + ry);
  side(x + rx, y + ry, x - rx, y + ry);
  side(x - rx, y + ry, x - rx, y - ry);
  int changes = 0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    bool a = vals[k] > 0, b = vals[(k + 1) % vals.size()] > 0;
    if (a != b) ++changes;
  }
  return changes;
}

}  // namespace oracle
