#include "froglab/pathsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace froglab {

namespace {

int path_cap(int d) { return d <= 2 ? kPathSearchCap2d : kPathSearchCapHighDim; }

void check_cap(int L, int cap, const char* what) {
    if (L < 1) throw std::invalid_argument(std::string(what) + ": L must be >= 1");
    if (L > cap) throw std::invalid_argument(std::string(what) + ": L above exactness cap");
}

struct BnbState {
    const std::vector<Site>* open;
    std::vector<char> visited;
    std::vector<Site> current;
    PathMax best;
    int open_left;
};

void bnb_extend(BnbState& st, const Site& at, int budget_left) {
    if (static_cast<int>(st.current.size()) > st.best.weight) {
        st.best.weight = static_cast<int>(st.current.size());
        st.best.path = st.current;
    }
    // Each further vertex costs at least one unit of budget.
    const int bound = static_cast<int>(st.current.size()) +
                      std::min(st.open_left, budget_left);
    if (bound <= st.best.weight) return;
    const auto& open = *st.open;
    for (std::size_t i = 0; i < open.size(); ++i) {
        if (st.visited[i]) continue;
        const int cost = static_cast<int>(l1_dist(at, open[i]));
        if (cost > budget_left) continue;
        st.visited[i] = 1;
        --st.open_left;
        st.current.push_back(open[i]);
        bnb_extend(st, open[i], budget_left - cost);
        st.current.pop_back();
        ++st.open_left;
        st.visited[i] = 0;
    }
}

}  // namespace

PathMax max_path_weight(const SiteField& field, int L) {
    check_cap(L, path_cap(field.dim()), "max_path_weight");
    if (field.radius() < L)
        throw std::invalid_argument("max_path_weight: field does not cover B(L)");

    std::vector<Site> open;
    for (const Site& s : box_sites(field.dim(), L))
        if (field.at(s)) open.push_back(s);

    PathMax best;
    best.path = {Site()};  // a single-vertex path always exists, weight 0
    if (open.empty()) return best;

    BnbState st;
    st.open = &open;
    st.visited.assign(open.size(), 0);
    st.best = best;
    st.open_left = static_cast<int>(open.size());
    for (std::size_t i = 0; i < open.size(); ++i) {
        if (static_cast<int>(open.size()) <= st.best.weight) break;
        st.visited[i] = 1;
        --st.open_left;
        st.current.push_back(open[i]);
        bnb_extend(st, open[i], L);
        st.current.pop_back();
        ++st.open_left;
        st.visited[i] = 0;
    }
    return st.best;
}

namespace {

struct ExhaustiveState {
    const SiteField* field;
    const std::vector<Site>* sites;
    std::vector<char> visited;
    int weight = 0;
    int best = 0;
    bool open_only = false;
};

void exhaustive_extend(ExhaustiveState& st, const Site& at, int budget_left) {
    st.best = std::max(st.best, st.weight);
    const auto& sites = *st.sites;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (st.visited[i]) continue;
        const int cost = static_cast<int>(l1_dist(at, sites[i]));
        if (cost == 0 || cost > budget_left) continue;
        const int w = st.field->at(sites[i]) ? 1 : 0;
        if (st.open_only && w == 0) continue;
        st.visited[i] = 1;
        st.weight += w;
        exhaustive_extend(st, sites[i], budget_left - cost);
        st.weight -= w;
        st.visited[i] = 0;
    }
}

int exhaustive_search(const SiteField& field, int L, bool open_only) {
    check_cap(L, kExhaustiveCap, "max_path_weight_exhaustive");
    if (field.radius() < L)
        throw std::invalid_argument("max_path_weight_exhaustive: field does not cover B(L)");
    const auto sites = box_sites(field.dim(), L);
    ExhaustiveState st;
    st.field = &field;
    st.sites = &sites;
    st.visited.assign(sites.size(), 0);
    st.open_only = open_only;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const int w = field.at(sites[i]) ? 1 : 0;
        if (open_only && w == 0) continue;
        st.visited[i] = 1;
        st.weight = w;
        exhaustive_extend(st, sites[i], L);
        st.visited[i] = 0;
    }
    return st.best;
}

}  // namespace

int max_path_weight_exhaustive(const SiteField& field, int L) {
    return exhaustive_search(field, L, false);
}

int max_path_weight_open_exhaustive(const SiteField& field, int L) {
    return exhaustive_search(field, L, true);
}

namespace {

struct WeightedState {
    const std::function<std::int64_t(const Site&, const Site&)>* weight;
    const std::vector<Site>* sites;
    std::vector<char> visited;
    std::int64_t sum = 0;
    std::int64_t best = 0;
};

void weighted_extend(WeightedState& st, const Site& at, int budget_left) {
    st.best = std::max(st.best, st.sum);
    const auto& sites = *st.sites;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (st.visited[i]) continue;
        const int cost = static_cast<int>(l1_dist(at, sites[i]));
        if (cost == 0 || cost > budget_left) continue;
        const std::int64_t w = (*st.weight)(at, sites[i]);
        st.visited[i] = 1;
        st.sum += w;
        weighted_extend(st, sites[i], budget_left - cost);
        st.sum -= w;
        st.visited[i] = 0;
    }
}

}  // namespace

std::int64_t weighted_path_max(
    const std::function<std::int64_t(const Site&, const Site&)>& weight, int d, int L) {
    check_cap(L, kWeightedCap, "weighted_path_max");
    const auto sites = box_sites(d, L);
    WeightedState st;
    st.weight = &weight;
    st.sites = &sites;
    st.visited.assign(sites.size(), 0);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        st.visited[i] = 1;
        st.sum = 0;
        weighted_extend(st, sites[i], L);
        st.visited[i] = 0;
    }
    return st.best;
}

}  // namespace froglab
