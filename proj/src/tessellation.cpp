#include "froglab/tessellation.hpp"

#include <cmath>
#include <stdexcept>

#include "froglab/pathsearch.hpp"

namespace froglab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_params(int d, int M) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("tessellation: bad dimension");
    if (M < 1) throw std::invalid_argument("tessellation: M must be >= 1");
}

}  // namespace

Site tess_group_shift(int d, int group) {
    Site w;
    for (int i = 0; i < d; ++i)
        w.c[static_cast<std::size_t>(i)] = (group >> i) & 1;
    return w;
}

Site tess_box_origin(int d, int M, int group, const Site& z) {
    const Site w = tess_group_shift(d, group);
    Site o;
    for (int i = 0; i < d; ++i)
        o.c[static_cast<std::size_t>(i)] =
            3 * M * (w.c[static_cast<std::size_t>(i)] + 2 * z.c[static_cast<std::size_t>(i)]);
    return o;
}

bool tess_box_contains(int d, int M, int group, const Site& z, const Site& y) {
    const Site o = tess_box_origin(d, M, group, z);
    for (int i = 0; i < d; ++i) {
        const auto yi = y.c[static_cast<std::size_t>(i)];
        const auto oi = o.c[static_cast<std::size_t>(i)];
        if (yi < oi || yi > oi + 3 * M) return false;
    }
    return true;
}

std::pair<int, Site> tess_covering_box(int d, int M, const Site& y) {
    check_params(d, M);
    int group = 0;
    Site z;
    for (int i = 0; i < d; ++i) {
        const std::int64_t q = floor_div(y.c[static_cast<std::size_t>(i)], 3 * M);
        const std::int64_t w = ((q % 2) + 2) % 2;
        group |= static_cast<int>(w) << i;
        z.c[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((q - w) / 2);
    }
    return {group, z};
}

std::int64_t tess_box_distance(int d, int M, int group, const Site& za, const Site& zb) {
    const Site oa = tess_box_origin(d, M, group, za);
    const Site ob = tess_box_origin(d, M, group, zb);
    std::int64_t dist = 0;
    for (int i = 0; i < d; ++i) {
        const std::int64_t gap =
            std::abs(static_cast<std::int64_t>(oa.c[static_cast<std::size_t>(i)]) -
                     ob.c[static_cast<std::size_t>(i)]) -
            3 * M;
        if (gap > 0) dist += gap;
    }
    return dist;
}

Tessellation tessellate(int d, int M, int region_radius) {
    check_params(d, M);
    if (region_radius < 0) throw std::invalid_argument("tessellate: negative region");
    Tessellation t;
    t.d = d;
    t.M = M;
    t.groups.resize(static_cast<std::size_t>(1) << d);

    const std::int64_t qlo = floor_div(-region_radius - 3 * M, 3 * M);
    const std::int64_t qhi = floor_div(region_radius, 3 * M);

    for (int group = 0; group < (1 << d); ++group) {
        const Site w = tess_group_shift(d, group);
        // Per-axis candidates: q = w + 2z with the box [3Mq, 3Mq+3M]
        // meeting [-R, R].
        std::vector<std::vector<std::int32_t>> axis(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            for (std::int64_t q = qlo; q <= qhi; ++q) {
                if (((q % 2) + 2) % 2 != w.c[static_cast<std::size_t>(i)]) continue;
                axis[static_cast<std::size_t>(i)].push_back(
                    static_cast<std::int32_t>((q - w.c[static_cast<std::size_t>(i)]) / 2));
            }
        }
        std::vector<Site> zs;
        std::vector<std::size_t> pos(static_cast<std::size_t>(d), 0);
        for (;;) {
            Site z;
            for (int i = 0; i < d; ++i)
                z.c[static_cast<std::size_t>(i)] =
                    axis[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
            zs.push_back(z);
            int i = d - 1;
            while (i >= 0) {
                if (++pos[static_cast<std::size_t>(i)] <
                    axis[static_cast<std::size_t>(i)].size())
                    break;
                pos[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
        t.groups[static_cast<std::size_t>(group)] = std::move(zs);
    }
    return t;
}

int tessellation_field_radius(int L, int M) {
    const int l_proj = (L + 3 * M - 1) / (3 * M);
    return 6 * M * (l_proj + 1);
}

TessellationReport tessellation_bound_check(const SiteField& field, int L, int M) {
    check_params(field.dim(), M);
    if (L < 1) throw std::invalid_argument("tessellation_bound_check: L must be >= 1");
    if (field.radius() < tessellation_field_radius(L, M))
        throw std::invalid_argument(
            "tessellation_bound_check: field does not cover the projected boxes");

    const int d = field.dim();
    TessellationReport rep;
    rep.L = L;
    rep.M = M;
    rep.l_proj = (L + 3 * M - 1) / (3 * M);
    rep.x_l = max_path_weight(field, L).weight;

    std::int64_t cell_factor = 1;
    for (int i = 0; i < d; ++i) cell_factor *= 3 * M + 1;

    std::int64_t boxes_scanned = 0;
    std::int64_t boxes_open = 0;
    std::int64_t sum = 0;
    for (int group = 0; group < (1 << d); ++group) {
        SiteField ys(d, rep.l_proj, 0, field.seed(), 0.0);
        for (const Site& z : box_sites(d, rep.l_proj)) {
            const Site o = tess_box_origin(d, M, group, z);
            bool open = false;
            Site x = o;
            // scan the (3M+1)^d cells of the box
            std::vector<int> idx(static_cast<std::size_t>(d), 0);
            for (;;) {
                if (field.at(x)) {
                    open = true;
                    break;
                }
                int i = d - 1;
                while (i >= 0) {
                    if (++idx[static_cast<std::size_t>(i)] <= 3 * M) {
                        ++x.c[static_cast<std::size_t>(i)];
                        break;
                    }
                    idx[static_cast<std::size_t>(i)] = 0;
                    x.c[static_cast<std::size_t>(i)] = o.c[static_cast<std::size_t>(i)];
                    --i;
                }
                if (i < 0) break;
            }
            ys.set(z, open);
            ++boxes_scanned;
            boxes_open += open ? 1 : 0;
        }
        rep.group_maxima.push_back(max_path_weight(ys, rep.l_proj).weight);
        sum += rep.group_maxima.back();
    }

    rep.bound = cell_factor * sum;
    rep.holds = rep.x_l <= rep.bound;
    rep.p_hat = static_cast<double>(boxes_open) / static_cast<double>(boxes_scanned);
    rep.p_bound = static_cast<double>(cell_factor) * field.density();
    return rep;
}

}  // namespace froglab
