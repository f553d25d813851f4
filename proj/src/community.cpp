#include "lodcloud/community.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

// Working copy of an undirected view: adjacency annotated with edge ids so
// edges can be masked during Girvan-Newman removal.
struct UGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge id)
    std::vector<int> degree;
};

UGraph build_ugraph(const UndirectedView& view) {
    UGraph g;
    g.n = view.vertex_count();
    g.edges = view.edges();
    g.adj.resize(g.n);
    g.degree.assign(g.n, 0);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& [u, v] = g.edges[e];
        g.adj[u].emplace_back(v, e);
        g.adj[v].emplace_back(u, e);
        ++g.degree[u];
        ++g.degree[v];
    }
    return g;
}

// Component labels in discovery order from vertex 0 upward.
std::vector<int> components_of(const UGraph& g, const std::vector<char>& edge_alive,
                               int* count_out = nullptr) {
    std::vector<int> label(g.n, -1);
    int count = 0;
    std::vector<int> frontier;
    for (int root = 0; root < g.n; ++root) {
        if (label[root] >= 0)
            continue;
        label[root] = count;
        frontier.assign(1, root);
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (const auto& [w, e] : g.adj[v]) {
                if (edge_alive[e] && label[w] < 0) {
                    label[w] = count;
                    frontier.push_back(w);
                }
            }
        }
        ++count;
    }
    if (count_out)
        *count_out = count;
    return label;
}

// Brandes accumulation restricted to alive edges; every unordered vertex
// pair contributes one unit of credit split across its shortest paths.
std::vector<double> betweenness_masked(const UGraph& g,
                                       const std::vector<char>& edge_alive) {
    std::vector<double> score(g.edges.size(), 0.0);
    std::vector<int> dist(g.n);
    std::vector<double> sigma(g.n);
    std::vector<double> delta(g.n);
    std::vector<std::vector<std::pair<int, int>>> pred(g.n);
    std::vector<int> order;
    order.reserve(g.n);

    for (int source = 0; source < g.n; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred)
            p.clear();
        order.clear();

        dist[source] = 0;
        sigma[source] = 1.0;
        std::queue<int> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            order.push_back(v);
            for (const auto& [w, e] : g.adj[v]) {
                if (!edge_alive[e])
                    continue;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    frontier.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].emplace_back(v, e);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (const auto& [v, e] : pred[w]) {
                const double credit = sigma[v] / sigma[w] * (1.0 + delta[w]);
                score[e] += credit;
                delta[v] += credit;
            }
        }
    }
    for (double& s : score)
        s *= 0.5;
    return score;
}

// Modularity contribution of a partition of (a subgraph of) the analyzed
// graph, with m fixed to the full graph's undirected edge count.
double partition_contribution(const UGraph& g, const std::vector<int>& assignment,
                              int community_count, double m_global) {
    std::vector<double> intra(community_count, 0.0);
    std::vector<double> degree_sum(community_count, 0.0);
    for (const auto& [u, v] : g.edges)
        if (assignment[u] == assignment[v])
            intra[assignment[u]] += 1.0;
    for (int v = 0; v < g.n; ++v)
        degree_sum[assignment[v]] += g.degree[v];

    double q = 0.0;
    for (int c = 0; c < community_count; ++c) {
        const double d = degree_sum[c] / (2.0 * m_global);
        q += intra[c] / m_global - d * d;
    }
    return q;
}

struct CutRecord {
    int step = 0;
    std::vector<int> assignment;
    int community_count = 0;
    double contribution = 0.0;
};

size_t best_record(const std::vector<CutRecord>& records) {
    size_t best = 0;
    for (size_t i = 1; i < records.size(); ++i)
        if (records[i].contribution > records[best].contribution)
            best = i;
    return best;
}

std::vector<CutRecord> gn_run(const UGraph& g, double m_global) {
    std::vector<char> alive(g.edges.size(), 1);
    std::vector<CutRecord> records;

    int component_count = 0;
    CutRecord initial;
    initial.assignment = components_of(g, alive, &component_count);
    initial.community_count = component_count;
    initial.contribution =
        partition_contribution(g, initial.assignment, component_count, m_global);
    records.push_back(std::move(initial));

    int remaining = static_cast<int>(g.edges.size());
    int removed = 0;
    while (remaining > 0) {
        const std::vector<double> score = betweenness_masked(g, alive);
        int target = -1;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (alive[e] && (target < 0 || score[e] > score[target]))
                target = e;
        alive[target] = 0;
        --remaining;
        ++removed;

        int count = 0;
        std::vector<int> label = components_of(g, alive, &count);
        if (count > component_count) {
            component_count = count;
            CutRecord record;
            record.step = removed;
            record.community_count = count;
            record.contribution = partition_contribution(g, label, count, m_global);
            record.assignment = std::move(label);
            records.push_back(std::move(record));
        }
    }
    return records;
}

// Recursive spectral bisection of the generalized modularity matrix on a
// connected graph. Zero eigenvector entries fall on the positive side; a
// split is kept only while its modularity gain stays positive.
std::vector<int> eigen_run(const UGraph& g, double m_global) {
    std::vector<int> assignment(g.n, -1);
    int next_community = 0;

    std::vector<std::vector<int>> pending;
    {
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v)
            all[v] = v;
        pending.push_back(std::move(all));
    }

    while (!pending.empty()) {
        std::vector<int> subset = std::move(pending.back());
        pending.pop_back();
        const int s = static_cast<int>(subset.size());
        if (s == 1) {
            assignment[subset[0]] = next_community++;
            continue;
        }

        std::vector<int> local(g.n, -1);
        for (int i = 0; i < s; ++i)
            local[subset[i]] = i;

        // B_ij = A_ij - k_i k_j / 2m, then the diagonal absorbs the row sums
        // so every row of the generalized matrix sums to zero.
        std::vector<std::vector<double>> b(s, std::vector<double>(s, 0.0));
        for (int i = 0; i < s; ++i) {
            const double ki = g.degree[subset[i]];
            for (int j = 0; j < s; ++j)
                b[i][j] = -ki * g.degree[subset[j]] / (2.0 * m_global);
        }
        for (int i = 0; i < s; ++i)
            for (const auto& [w, e] : g.adj[subset[i]]) {
                (void)e;
                if (local[w] >= 0)
                    b[i][local[w]] += 1.0;
            }
        for (int i = 0; i < s; ++i) {
            double row_sum = 0.0;
            for (int j = 0; j < s; ++j)
                row_sum += b[i][j];
            b[i][i] -= row_sum;
        }

        // Gershgorin shift: all eigenvalues of b + shift*I are nonnegative,
        // so power iteration homes in on the algebraically largest one.
        double shift = 0.0;
        for (int i = 0; i < s; ++i) {
            double radius = 0.0;
            for (int j = 0; j < s; ++j)
                if (j != i)
                    radius += std::fabs(b[i][j]);
            shift = std::max(shift, radius - b[i][i]);
        }

        std::vector<double> v(s), w(s);
        for (int i = 0; i < s; ++i)
            v[i] = 1.0 + 1e-6 * std::sin(static_cast<double>(i + 1));
        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v)
            x /= norm;

        bool converged = false;
        bool degenerate = false;
        constexpr int kMaxIterations = 100000;
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            for (int i = 0; i < s; ++i) {
                double sum = shift * v[i];
                for (int j = 0; j < s; ++j)
                    sum += b[i][j] * v[j];
                w[i] = sum;
            }
            norm = 0.0;
            for (double x : w)
                norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 1e-200) {
                // v landed in the null space of the shifted matrix; the
                // leading eigenvalue is not positive, so the set holds.
                degenerate = true;
                break;
            }
            double diff = 0.0;
            for (int i = 0; i < s; ++i) {
                w[i] /= norm;
                diff = std::max(diff, std::fabs(w[i] - v[i]));
            }
            v.swap(w);
            if (diff < 1e-10) {
                converged = true;
                break;
            }
        }
        if (!converged && !degenerate)
            throw NoConvergenceError(
                "power iteration did not converge within 100000 steps");

        bool split = false;
        if (!degenerate) {
            std::vector<double> sign(s);
            int positives = 0;
            for (int i = 0; i < s; ++i) {
                sign[i] = v[i] >= 0.0 ? 1.0 : -1.0;
                if (sign[i] > 0.0)
                    ++positives;
            }
            if (positives > 0 && positives < s) {
                double quad = 0.0;
                for (int i = 0; i < s; ++i) {
                    double row = 0.0;
                    for (int j = 0; j < s; ++j)
                        row += b[i][j] * sign[j];
                    quad += sign[i] * row;
                }
                const double delta_q = quad / (4.0 * m_global);
                if (delta_q > 1e-12) {
                    std::vector<int> positive_side, negative_side;
                    for (int i = 0; i < s; ++i)
                        (sign[i] > 0.0 ? positive_side : negative_side)
                            .push_back(subset[i]);
                    pending.push_back(std::move(negative_side));
                    pending.push_back(std::move(positive_side));
                    split = true;
                }
            }
        }
        if (!split) {
            for (int vertex : subset)
                assignment[vertex] = next_community;
            ++next_community;
        }
    }
    return assignment;
}

// Pons-Latapy agglomeration on a connected graph: communities at squared
// random-walk distance are merged Ward-style, nearest (lowest cost) first,
// and only neighboring communities may merge.
std::vector<CutRecord> walktrap_run(const UGraph& g, int walk_length,
                                    double m_global) {
    const int n = g.n;
    std::vector<CutRecord> records;

    CutRecord initial;
    initial.assignment.resize(n);
    for (int v = 0; v < n; ++v)
        initial.assignment[v] = v;
    initial.community_count = n;
    initial.contribution = partition_contribution(g, initial.assignment, n, m_global);
    records.push_back(std::move(initial));
    if (n == 1)
        return records;

    // Dense walk_length-step transition probabilities.
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v)
        for (const auto& [w, e] : g.adj[v]) {
            (void)e;
            p[v][w] = 1.0 / g.degree[v];
        }
    std::vector<std::vector<double>> pt = p;
    for (int step = 1; step < walk_length; ++step) {
        std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const double pik = pt[i][k];
                if (pik == 0.0)
                    continue;
                for (int j = 0; j < n; ++j)
                    next[i][j] += pik * p[k][j];
            }
        pt = std::move(next);
    }

    const int slots = 2 * n - 1;
    std::vector<char> alive(slots, 0);
    std::vector<int> size(slots, 0);
    std::vector<int> rep(slots, 0);
    std::vector<std::vector<int>> members(slots);
    std::vector<std::vector<double>> prob(slots);
    std::vector<std::set<int>> neighbors(slots);

    for (int v = 0; v < n; ++v) {
        alive[v] = 1;
        size[v] = 1;
        rep[v] = v;
        members[v] = {v};
        prob[v] = pt[v];
    }
    for (const auto& [u, v] : g.edges) {
        neighbors[u].insert(v);
        neighbors[v].insert(u);
    }

    auto merge_cost = [&](int a, int c) {
        double r2 = 0.0;
        for (int k = 0; k < n; ++k) {
            const double d = prob[a][k] - prob[c][k];
            r2 += d * d / g.degree[k];
        }
        return static_cast<double>(size[a]) * size[c] / (size[a] + size[c]) * r2 / n;
    };

    int next_id = n;
    std::vector<int> alive_ids(n);
    for (int v = 0; v < n; ++v)
        alive_ids[v] = v;

    for (int step = 1; step < n; ++step) {
        int best_a = -1, best_b = -1;
        double best_cost = 0.0;
        for (int a : alive_ids)
            for (int c : neighbors[a]) {
                if (c < a)
                    continue;
                const double cost = merge_cost(a, c);
                const int lo = std::min(rep[a], rep[c]);
                const int hi = std::max(rep[a], rep[c]);
                if (best_a < 0 || cost < best_cost ||
                    (cost == best_cost &&
                     (lo < std::min(rep[best_a], rep[best_b]) ||
                      (lo == std::min(rep[best_a], rep[best_b]) &&
                       hi < std::max(rep[best_a], rep[best_b]))))) {
                    best_a = a;
                    best_b = c;
                    best_cost = cost;
                }
            }

        const int merged = next_id++;
        alive[merged] = 1;
        alive[best_a] = alive[best_b] = 0;
        size[merged] = size[best_a] + size[best_b];
        rep[merged] = std::min(rep[best_a], rep[best_b]);
        members[merged] = members[best_a];
        members[merged].insert(members[merged].end(), members[best_b].begin(),
                               members[best_b].end());
        prob[merged].resize(n);
        for (int k = 0; k < n; ++k)
            prob[merged][k] = (size[best_a] * prob[best_a][k] +
                               size[best_b] * prob[best_b][k]) /
                              size[merged];
        for (int c : neighbors[best_a])
            if (c != best_b)
                neighbors[merged].insert(c);
        for (int c : neighbors[best_b])
            if (c != best_a)
                neighbors[merged].insert(c);
        for (int c : neighbors[merged]) {
            neighbors[c].erase(best_a);
            neighbors[c].erase(best_b);
            neighbors[c].insert(merged);
        }
        neighbors[best_a].clear();
        neighbors[best_b].clear();
        alive_ids.erase(std::remove_if(alive_ids.begin(), alive_ids.end(),
                                       [&](int id) {
                                           return id == best_a || id == best_b;
                                       }),
                        alive_ids.end());
        alive_ids.push_back(merged);

        CutRecord record;
        record.step = step;
        record.assignment.assign(n, -1);
        int label = 0;
        for (int id : alive_ids) {
            for (int member : members[id])
                record.assignment[member] = label;
            ++label;
        }
        record.community_count = label;
        record.contribution =
            partition_contribution(g, record.assignment, label, m_global);
        records.push_back(std::move(record));
    }
    return records;
}

// Single-vertex Metropolis sweeps over a geometric cooling schedule on a
// connected graph; at gamma = 1 the Potts ground state is the modularity
// maximum.
std::vector<int> spinglass_run(const UGraph& g, int spins, double gamma,
                               std::uint64_t seed, double m_global) {
    if (spins < 2)
        throw DomainError("spinglass needs at least 2 spin states");
    const int n = g.n;
    std::mt19937_64 engine(seed);
    std::uniform_int_distribution<int> pick_spin(0, spins - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<int> spin(n);
    std::vector<double> degree_sum(spins, 0.0);
    for (int v = 0; v < n; ++v) {
        spin[v] = pick_spin(engine);
        degree_sum[spin[v]] += g.degree[v];
    }

    const double two_m = 2.0 * m_global;
    std::vector<int> links(spins, 0);
    for (double t = 1.0; t >= 0.01; t *= 0.99) {
        for (int v = 0; v < n; ++v) {
            const int proposal = pick_spin(engine);
            const int current = spin[v];
            if (proposal == current)
                continue;
            int to_current = 0, to_proposal = 0;
            for (const auto& [w, e] : g.adj[v]) {
                (void)e;
                if (spin[w] == current)
                    ++to_current;
                else if (spin[w] == proposal)
                    ++to_proposal;
            }
            const double kv = g.degree[v];
            const double delta_h =
                (to_current - to_proposal) +
                gamma * kv * (degree_sum[proposal] - degree_sum[current] + kv) / two_m;
            if (delta_h <= 0.0 || unit(engine) < std::exp(-delta_h / t)) {
                spin[v] = proposal;
                degree_sum[current] -= kv;
                degree_sum[proposal] += kv;
            }
        }
    }
    return spin;
}

struct Component {
    std::vector<int> members; // ascending global vertex ids
    UGraph graph;             // local indices follow `members` order
};

std::vector<Component> split_components(const UGraph& g) {
    const std::vector<char> alive(g.edges.size(), 1);
    int count = 0;
    const std::vector<int> label = components_of(g, alive, &count);

    std::vector<Component> components(count);
    std::vector<int> local(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        Component& component = components[label[v]];
        local[v] = static_cast<int>(component.members.size());
        component.members.push_back(v);
    }
    for (Component& component : components) {
        component.graph.n = static_cast<int>(component.members.size());
        component.graph.adj.resize(component.graph.n);
        component.graph.degree.assign(component.graph.n, 0);
    }
    for (const auto& [u, v] : g.edges) {
        Component& component = components[label[u]];
        const int lu = local[u];
        const int lv = local[v];
        const int e = static_cast<int>(component.graph.edges.size());
        component.graph.edges.emplace_back(lu, lv);
        component.graph.adj[lu].emplace_back(lv, e);
        component.graph.adj[lv].emplace_back(lu, e);
        ++component.graph.degree[lu];
        ++component.graph.degree[lv];
    }
    return components;
}

void validate_partition(const UndirectedView& view, const Partition& partition) {
    if (static_cast<int>(partition.assignment.size()) != view.vertex_count())
        throw LengthMismatchError("partition covers " +
                                  std::to_string(partition.assignment.size()) +
                                  " vertices, graph has " +
                                  std::to_string(view.vertex_count()));
    for (int id : partition.assignment)
        if (id < 0 || id >= partition.community_count)
            throw DomainError("partition community id out of range");
}

} // namespace

Partition canonical_partition(const std::vector<int>& raw_assignment) {
    int max_label = -1;
    for (int label : raw_assignment)
        max_label = std::max(max_label, label);

    std::vector<int> remap(max_label + 1, -1);
    Partition partition;
    partition.assignment.resize(raw_assignment.size());
    int next = 0;
    for (size_t v = 0; v < raw_assignment.size(); ++v) {
        const int label = raw_assignment[v];
        if (label < 0)
            throw DomainError("negative community label");
        if (remap[label] < 0)
            remap[label] = next++;
        partition.assignment[v] = remap[label];
    }
    partition.community_count = next;
    return partition;
}

double modularity(const UndirectedView& view, const Partition& partition) {
    validate_partition(view, partition);
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("modularity is undefined without edges");
    const UGraph g = build_ugraph(view);
    return partition_contribution(g, partition.assignment, partition.community_count,
                                  static_cast<double>(g.edges.size()));
}

std::vector<double> edge_betweenness(const UndirectedView& view) {
    const UGraph g = build_ugraph(view);
    const std::vector<char> alive(g.edges.size(), 1);
    return betweenness_masked(g, alive);
}

GirvanNewmanResult detect_girvan_newman(const UndirectedView& view) {
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("community detection needs at least one edge");
    const UGraph g = build_ugraph(view);
    const double m = static_cast<double>(g.edges.size());
    const std::vector<CutRecord> records = gn_run(g, m);

    GirvanNewmanResult result;
    for (const CutRecord& record : records) {
        DendrogramStep step;
        step.step = record.step;
        step.partition = canonical_partition(record.assignment);
        step.modularity = record.contribution;
        result.dendrogram.push_back(std::move(step));
    }
    result.partition = result.dendrogram[best_record(records)].partition;
    return result;
}

Partition detect_leading_eigenvector(const UndirectedView& view) {
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("community detection needs at least one edge");
    const UGraph g = build_ugraph(view);
    const double m = static_cast<double>(g.edges.size());

    std::vector<int> assignment(g.n, -1);
    int offset = 0;
    for (const Component& component : split_components(g)) {
        if (component.graph.n == 1) {
            assignment[component.members[0]] = offset++;
            continue;
        }
        const std::vector<int> local = eigen_run(component.graph, m);
        int local_max = 0;
        for (size_t i = 0; i < local.size(); ++i) {
            assignment[component.members[i]] = offset + local[i];
            local_max = std::max(local_max, local[i]);
        }
        offset += local_max + 1;
    }
    return canonical_partition(assignment);
}

WalktrapResult detect_walktrap(const UndirectedView& view, int walk_length) {
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("community detection needs at least one edge");
    if (walk_length < 1)
        throw DomainError("walk length must be a positive integer");
    const UGraph g = build_ugraph(view);
    const double m = static_cast<double>(g.edges.size());

    const std::vector<Component> components = split_components(g);
    std::vector<std::vector<CutRecord>> runs;
    runs.reserve(components.size());
    for (const Component& component : components)
        runs.push_back(walktrap_run(component.graph, walk_length, m));

    // Components are agglomerated one after another; finished components are
    // pinned at their best cut while later ones still sit at singletons, so
    // every recorded snapshot is a real partition of the whole vertex set and
    // the best-cut combination is always among the snapshots.
    std::vector<size_t> level(components.size(), 0);
    auto snapshot = [&](int step) {
        CutRecord record;
        record.step = step;
        record.assignment.assign(g.n, -1);
        record.community_count = 0;
        record.contribution = 0.0;
        for (size_t j = 0; j < components.size(); ++j) {
            const CutRecord& chosen = runs[j][level[j]];
            for (size_t i = 0; i < components[j].members.size(); ++i)
                record.assignment[components[j].members[i]] =
                    record.community_count + chosen.assignment[i];
            record.community_count += chosen.community_count;
            record.contribution += chosen.contribution;
        }
        return record;
    };

    std::vector<CutRecord> snapshots;
    snapshots.push_back(snapshot(0));
    int step = 0;
    for (size_t j = 0; j < components.size(); ++j) {
        for (size_t cut = 1; cut < runs[j].size(); ++cut) {
            level[j] = cut;
            snapshots.push_back(snapshot(++step));
        }
        level[j] = best_record(runs[j]);
    }

    WalktrapResult result;
    for (const CutRecord& record : snapshots) {
        DendrogramStep dstep;
        dstep.step = record.step;
        dstep.partition = canonical_partition(record.assignment);
        dstep.modularity = record.contribution;
        result.dendrogram.push_back(std::move(dstep));
    }
    result.partition = result.dendrogram[best_record(snapshots)].partition;
    return result;
}

Partition detect_spinglass(const UndirectedView& view, int spins, double gamma,
                           unsigned long long seed) {
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("community detection needs at least one edge");
    const UGraph g = build_ugraph(view);
    const std::vector<char> alive(g.edges.size(), 1);
    int count = 0;
    components_of(g, alive, &count);
    if (count > 1)
        throw DisconnectedError("spinglass needs a connected graph; run it per component");
    const double m = static_cast<double>(g.edges.size());
    return canonical_partition(spinglass_run(g, spins, gamma, seed, m));
}

Partition detect_communities(const UndirectedView& view,
                             CommunityAlgorithm algorithm,
                             const CommunityParams& params) {
    if (view.edge_count() == 0)
        throw EmptyEdgeSetError("community detection needs at least one edge");
    const UGraph g = build_ugraph(view);
    const double m = static_cast<double>(g.edges.size());

    std::vector<int> assignment(g.n, -1);
    int offset = 0;
    for (const Component& component : split_components(g)) {
        std::vector<int> local;
        if (component.graph.n == 1) {
            local.assign(1, 0);
        } else {
            switch (algorithm) {
            case CommunityAlgorithm::girvan_newman: {
                const std::vector<CutRecord> records = gn_run(component.graph, m);
                local = records[best_record(records)].assignment;
                break;
            }
            case CommunityAlgorithm::leading_eigenvector:
                local = eigen_run(component.graph, m);
                break;
            case CommunityAlgorithm::walktrap: {
                const std::vector<CutRecord> records =
                    walktrap_run(component.graph, params.walk_length, m);
                local = records[best_record(records)].assignment;
                break;
            }
            case CommunityAlgorithm::spinglass: {
                double best_q = 0.0;
                for (int restart = 0; restart < std::max(1, params.restarts);
                     ++restart) {
                    std::vector<int> candidate = spinglass_run(
                        component.graph, params.spins, params.gamma,
                        params.seed + static_cast<std::uint64_t>(restart), m);
                    int count = 0;
                    for (int label : candidate)
                        count = std::max(count, label + 1);
                    const double q = partition_contribution(component.graph,
                                                            candidate, count, m);
                    if (local.empty() || q > best_q) {
                        best_q = q;
                        local = std::move(candidate);
                    }
                }
                break;
            }
            }
        }
        int local_max = 0;
        for (size_t i = 0; i < local.size(); ++i) {
            assignment[component.members[i]] = offset + local[i];
            local_max = std::max(local_max, local[i]);
        }
        offset += local_max + 1;
    }
    return canonical_partition(assignment);
}

const char* community_algorithm_name(CommunityAlgorithm algorithm) {
    switch (algorithm) {
    case CommunityAlgorithm::girvan_newman:
        return "girvan-newman";
    case CommunityAlgorithm::leading_eigenvector:
        return "leading-eigenvector";
    case CommunityAlgorithm::walktrap:
        return "walktrap";
    case CommunityAlgorithm::spinglass:
        return "spinglass";
    }
    return "unknown";
}

std::optional<CommunityAlgorithm> parse_community_algorithm(std::string_view name) {
    if (name == "girvan-newman" || name == "betweenness" || name == "edge-betweenness")
        return CommunityAlgorithm::girvan_newman;
    if (name == "leading-eigenvector" || name == "eigen")
        return CommunityAlgorithm::leading_eigenvector;
    if (name == "walktrap")
        return CommunityAlgorithm::walktrap;
    if (name == "spinglass")
        return CommunityAlgorithm::spinglass;
    return std::nullopt;
}

} // namespace lodcloud
