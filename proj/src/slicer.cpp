#include "printstiff/slicer.hpp"

#include "printstiff/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <unordered_map>

namespace printstiff {

namespace {

struct Crossings
{
    std::vector<Point2>             nodes;
    std::vector<std::array<int, 2>> segments;
};

Crossings intersect(const TriangleMesh &mesh, double z)
{
    const auto &v = mesh.vertices();
    Crossings   out;
    std::unordered_map<uint64_t, int> edge_node;
    auto node_on_edge = [&](int a, int b) {
        if (a > b)
            std::swap(a, b);
        const uint64_t key      = (uint64_t(uint32_t(a)) << 32) | uint32_t(b);
        auto [it, inserted]     = edge_node.try_emplace(key, int(out.nodes.size()));
        if (inserted) {
            const Point3 &pa = v[a];
            const Point3 &pb = v[b];
            const double  t  = (z - pa.z) / (pb.z - pa.z);
            out.nodes.push_back({pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)});
        }
        return it->second;
    };

    for (const auto &tri : mesh.triangles()) {
        int ends[2];
        int found = 0;
        for (int k = 0; k < 3; ++k) {
            const int  a      = tri[k];
            const int  b      = tri[(k + 1) % 3];
            const bool above_a = v[a].z > z;
            const bool above_b = v[b].z > z;
            if (above_a != above_b && found < 2)
                ends[found++] = node_on_edge(a, b);
        }
        if (found == 2 && ends[0] != ends[1])
            out.segments.push_back({ends[0], ends[1]});
    }
    return out;
}

// Merges nodes within kSnapTolerance of each other; returns the new id per node.
std::vector<int> snap_nodes(const std::vector<Point2> &nodes)
{
    std::vector<int> id(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        id[i] = int(i);
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return nodes[a].x < nodes[b].x || (nodes[a].x == nodes[b].x && a < b);
    });
    for (size_t i = 0; i < order.size(); ++i) {
        const int a = order[i];
        if (id[a] != a)
            continue;
        for (size_t j = i + 1; j < order.size() && nodes[order[j]].x - nodes[a].x <= kSnapTolerance; ++j) {
            const int b = order[j];
            if (id[b] == b && norm(nodes[b] - nodes[a]) <= kSnapTolerance)
                id[b] = a;
        }
    }
    return id;
}

} // namespace

LayerContour slice_at(const TriangleMesh &mesh, double z, double nudge, bool require_manifold)
{
    if (require_manifold && !mesh.is_manifold())
        throw OpenLoop("mesh is not manifold: some edge is not shared by exactly two triangles");

    double plane = z;
    bool   clear = false;
    for (int attempt = 0; attempt < 8 && !clear; ++attempt) {
        clear = std::none_of(mesh.vertices().begin(), mesh.vertices().end(),
                             [&](const Point3 &p) { return std::abs(p.z - plane) <= kVertexClearance; });
        if (!clear)
            plane += nudge;
    }
    if (!clear)
        throw DegenerateSlice("plane z=" + std::to_string(z) + " stays on mesh vertices after nudging");

    LayerContour empty;
    empty.z = z;
    if (plane <= mesh.bounds().min.z || plane >= mesh.bounds().max.z)
        return empty;

    Crossings cr = intersect(mesh, plane);
    const size_t n = cr.nodes.size();

    std::vector<std::vector<int>> adj(n);
    for (const auto &s : cr.segments) {
        adj[s[0]].push_back(s[1]);
        adj[s[1]].push_back(s[0]);
    }
    const bool all_two = std::all_of(adj.begin(), adj.end(), [](const auto &a) { return a.size() == 2; });
    if (!all_two) {
        // Unwelded soup: fall back to positional snapping.
        const std::vector<int> id = snap_nodes(cr.nodes);
        for (auto &a : adj)
            a.clear();
        for (const auto &s : cr.segments) {
            const int a = id[s[0]], b = id[s[1]];
            if (a == b)
                continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (size_t i = 0; i < n; ++i) {
            if (id[i] != int(i) || adj[i].empty())
                continue;
            if (adj[i].size() != 2)
                throw OpenLoop("contour chain at (" + std::to_string(cr.nodes[i].x) + ", " +
                               std::to_string(cr.nodes[i].y) + ") cannot be closed: " +
                               std::to_string(adj[i].size()) + " segment(s) meet there");
        }
    }

    std::vector<Ring> rings;
    std::vector<char> seen(n, 0);
    for (size_t start = 0; start < n; ++start) {
        if (seen[start] || adj[start].size() != 2)
            continue;
        Ring ring;
        int  prev = -1;
        int  cur  = int(start);
        while (!seen[cur]) {
            seen[cur] = 1;
            ring.push_back(cr.nodes[cur]);
            const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            prev           = cur;
            cur            = next;
        }
        if (cur != int(start))
            throw OpenLoop("contour chain does not return to its start");
        rings.push_back(std::move(ring));
    }
    return make_contour(z, std::move(rings));
}

int layer_count(double height, double thickness)
{
    return int(std::floor(height / thickness + 1e-9));
}

SliceStack slice_stack(const TriangleMesh &mesh, double layer_thickness, const SliceOptions &options)
{
    const double height = mesh.height();
    if (!(layer_thickness > 0.) || !(layer_thickness < height))
        throw InvalidThickness("layer thickness " + std::to_string(layer_thickness) +
                               " mm must lie in (0, part height = " + std::to_string(height) + " mm)");
    const int n = layer_count(height, layer_thickness);

    SliceStack stack;
    stack.layer_thickness = layer_thickness;
    stack.part_height     = height;
    stack.base_z          = mesh.bounds().min.z;
    stack.residual        = std::max(0., height - n * layer_thickness);
    stack.plane           = options.plane;
    stack.contours.resize(size_t(n));

    if (options.require_manifold && !mesh.is_manifold())
        throw OpenLoop("mesh is not manifold: some edge is not shared by exactly two triangles");

    const double offset = options.plane == LayerPlane::Mid ? 0.5 : 0.;
    const double nudge  = 1e-5 * layer_thickness;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            try {
                stack.contours[i] = slice_at(mesh, stack.base_z + (i + offset) * layer_thickness, nudge);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    detail::parallel_for(n, options.threads, [&](int i) { work(i, i + 1); });
    for (int i = 0; i < n; ++i) {
        if (!errors[i])
            continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (GeometryError &e) {
            e.set_layer(i);
            throw;
        }
    }
    return stack;
}

} // namespace printstiff
