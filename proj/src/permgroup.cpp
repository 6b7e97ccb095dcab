#include "circlex/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "circlex/circulant.hpp"
#include "circlex/digraph.hpp"

namespace circlex {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("images do not form a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (images_[v] != v) return false;
    return true;
}

bool Permutation::is_full_cycle() const {
    int v = 0, steps = 0;
    do {
        v = images_[v];
        ++steps;
    } while (v != 0 && steps <= degree());
    return steps == degree();
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(degree());
    for (int v = 0; v < degree(); ++v) p.images_[images_[v]] = v;
    return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> images(f.degree());
    for (int v = 0; v < f.degree(); ++v) images[v] = g[f[v]];
    return Permutation(std::move(images));
}

bool preserves_arcs(const Permutation& p, const DenseDigraph& g) {
    if (p.degree() != g.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.arc(u, v) != g.arc(p[u], p[v])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// stabilizer chain

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, std::vector<Level> chain)
    : degree_(degree), gens_(std::move(gens)), levels_(std::move(chain)) {
    recompute_order();
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
    for (const Permutation& p : gens_)
        if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    for (const Permutation& p : gens_) insert_residue(p);
    for (std::size_t i = levels_.size(); i-- > 0;) complete_level(i);
    recompute_order();
}

void PermGroup::rebuild_orbit(std::size_t i) {
    Level& lv = levels_[i];
    lv.orbit.assign(1, lv.base);
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit_pos[lv.base] = 0;
    lv.reps.assign(1, Permutation::identity(degree_));
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        for (std::size_t j = i; j < levels_.size(); ++j)
            for (const Permutation& s : levels_[j].gens) {
                int w = s[lv.orbit[k]];
                if (lv.orbit_pos[w] != -1) continue;
                lv.orbit_pos[w] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(w);
                lv.reps.push_back(compose(lv.reps[k], s));
            }
    }
}

// Strip transversal parts from p starting at the given level. Returns the
// residue and the level at which sifting stopped.
std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p) const {
    std::size_t i = 0;
    while (i < levels_.size()) {
        const Level& lv = levels_[i];
        int w = p[lv.base];
        if (lv.orbit_pos[w] == -1) break;
        p = compose(p, lv.reps[lv.orbit_pos[w]].inverse());
        ++i;
    }
    return {std::move(p), i};
}

bool PermGroup::insert_residue(Permutation p) {
    auto [residue, stop] = sift(std::move(p));
    if (residue.is_identity()) return false;
    if (stop == levels_.size()) {
        int moved = 0;
        while (residue[moved] == moved) ++moved;
        levels_.push_back(Level{moved, {}, {}, {}, {}});
    }
    levels_[stop].gens.push_back(std::move(residue));
    rebuild_orbit(stop);
    return true;
}

// Make the chain strong at level i, assuming deeper levels are strong:
// every Schreier generator of the level must sift to the identity.
void PermGroup::complete_level(std::size_t i) {
restart:
    rebuild_orbit(i);
    for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
        std::vector<Permutation> eff;
        for (std::size_t j = i; j < levels_.size(); ++j)
            for (const Permutation& s : levels_[j].gens) eff.push_back(s);
        for (const Permutation& s : eff) {
            Permutation schreier = compose(levels_[i].reps[k], s);
            int w = schreier[levels_[i].base];
            schreier = compose(schreier, levels_[i].reps[levels_[i].orbit_pos[w]].inverse());
            if (schreier.is_identity()) continue;
            std::size_t before = levels_.size();
            if (!insert_residue(std::move(schreier))) continue;
            std::size_t deepest = levels_.size() != before ? levels_.size() - 1 : before - 1;
            for (std::size_t j = deepest; j > i; --j) complete_level(j);
            goto restart;
        }
    }
}

void PermGroup::recompute_order() {
    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<int>(lv.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
    auto [residue, stop] = sift(p);
    return stop == levels_.size() && residue.is_identity();
}

void PermGroup::for_each_element(std::uint64_t budget,
                                 const std::function<void(const Permutation&)>& visit) const {
    if (order_ > budget)
        throw BudgetError("group order " + order_.str() + " exceeds enumeration budget " +
                          std::to_string(budget));
    std::function<void(std::size_t, const std::function<void(const Permutation&)>&)> walk =
        [&](std::size_t i, const std::function<void(const Permutation&)>& emit) {
            if (i == levels_.size()) {
                emit(Permutation::identity(degree_));
                return;
            }
            walk(i + 1, [&](const Permutation& h) {
                for (const Permutation& t : levels_[i].reps) emit(compose(h, t));
            });
        };
    walk(0, visit);
}

// ---------------------------------------------------------------------------
// automorphism search

namespace {

// Iterated neighborhood-color refinement over two digraphs at once, so the
// resulting color ids are comparable across them. compatible == false means
// the color histograms differ and no isomorphism can exist.
struct PairColors {
    std::vector<int> a, b;
    bool compatible = true;
};

PairColors refine_colors(const DenseDigraph& ga, const DenseDigraph& gb) {
    int na = ga.order(), nb = gb.order();
    PairColors pc;
    pc.a.resize(na);
    pc.b.resize(nb);

    std::map<std::tuple<int, int, int>, int> seed;
    auto seed_color = [&](const DenseDigraph& g, int v) {
        std::tuple<int, int, int> key{g.out_degree(v), g.in_degree(v), g.arc(v, v) ? 1 : 0};
        return seed.emplace(key, static_cast<int>(seed.size())).first->second;
    };
    for (int v = 0; v < na; ++v) pc.a[v] = seed_color(ga, v);
    for (int v = 0; v < nb; ++v) pc.b[v] = seed_color(gb, v);

    std::size_t classes = seed.size();
    while (true) {
        std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> next;
        auto next_color = [&](const DenseDigraph& g, const std::vector<int>& colors, int v) {
            std::vector<int> outs, ins;
            for (int u = 0; u < g.order(); ++u) {
                if (g.arc(v, u)) outs.push_back(colors[u]);
                if (g.arc(u, v)) ins.push_back(colors[u]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            std::tuple<int, std::vector<int>, std::vector<int>> key{colors[v], std::move(outs),
                                                                    std::move(ins)};
            return next.emplace(std::move(key), static_cast<int>(next.size())).first->second;
        };
        std::vector<int> ra(na), rb(nb);
        for (int v = 0; v < na; ++v) ra[v] = next_color(ga, pc.a, v);
        for (int v = 0; v < nb; ++v) rb[v] = next_color(gb, pc.b, v);
        if (next.size() == classes) break;
        classes = next.size();
        pc.a = std::move(ra);
        pc.b = std::move(rb);
    }

    std::map<int, int> ha, hb;
    for (int c : pc.a) ++ha[c];
    for (int c : pc.b) ++hb[c];
    pc.compatible = (ha == hb);
    return pc;
}

// Depth-first search for a single arc-preserving bijection ga -> gb
// extending the current partial assignment. Vertices are chosen and
// candidate images tried in ascending order.
struct IsoSearch {
    const DenseDigraph& ga;
    const DenseDigraph& gb;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> image;
    std::vector<int> preimage;
    std::vector<int> assigned;

    IsoSearch(const DenseDigraph& a, const DenseDigraph& b, const std::vector<int>& colors_a,
              const std::vector<int>& colors_b)
        : ga(a), gb(b), ca(colors_a), cb(colors_b), image(a.order(), -1),
          preimage(b.order(), -1) {}

    bool consistent(int u, int w) const {
        if (ca[u] != cb[w]) return false;
        if (ga.arc(u, u) != gb.arc(w, w)) return false;
        for (int v : assigned) {
            if (ga.arc(u, v) != gb.arc(w, image[v])) return false;
            if (ga.arc(v, u) != gb.arc(image[v], w)) return false;
        }
        return true;
    }

    bool try_assign(int u, int w) {
        if (preimage[w] != -1 || !consistent(u, w)) return false;
        image[u] = w;
        preimage[w] = u;
        assigned.push_back(u);
        return true;
    }

    void unassign(int u) {
        preimage[image[u]] = -1;
        image[u] = -1;
        assigned.pop_back();
    }

    bool extend() {
        int u = 0;
        while (u < ga.order() && image[u] != -1) ++u;
        if (u == ga.order()) return true;
        for (int w = 0; w < gb.order(); ++w) {
            if (!try_assign(u, w)) continue;
            if (extend()) return true;
            unassign(u);
        }
        return false;
    }
};

}  // namespace

// Searches one isomorphism between equal-order digraphs, optionally forced
// on a prefix of the vertices of ga. Exposed to the isomorphism module.
std::optional<Permutation> search_isomorphism(const DenseDigraph& ga, const DenseDigraph& gb,
                                              const std::vector<int>& prefix_images) {
    if (ga.order() != gb.order()) return std::nullopt;
    PairColors pc = refine_colors(ga, gb);
    if (!pc.compatible) return std::nullopt;
    IsoSearch search(ga, gb, pc.a, pc.b);
    for (std::size_t u = 0; u < prefix_images.size(); ++u)
        if (!search.try_assign(static_cast<int>(u), prefix_images[u])) return std::nullopt;
    if (!search.extend()) return std::nullopt;
    return Permutation(search.image);
}

PermGroup automorphism_group(const DenseDigraph& g, const SearchLimits& limits) {
    int n = g.order();
    if (n > limits.aut_bound)
        throw BudgetError("digraph order " + std::to_string(n) +
                          " exceeds automorphism search bound " + std::to_string(limits.aut_bound));
    PairColors pc = refine_colors(g, g);

    std::vector<PermGroup::Level> chain;
    std::vector<Permutation> all_gens;
    std::vector<int> prefix;
    prefix.reserve(n);
    for (int i = 0; i < n; ++i) {
        PermGroup::Level level;
        level.base = i;
        auto close_orbit = [&]() {
            level.orbit.assign(1, i);
            level.orbit_pos.assign(n, -1);
            level.orbit_pos[i] = 0;
            level.reps.assign(1, Permutation::identity(n));
            for (std::size_t k = 0; k < level.orbit.size(); ++k)
                for (const Permutation& s : level.gens) {
                    int w = s[level.orbit[k]];
                    if (level.orbit_pos[w] != -1) continue;
                    level.orbit_pos[w] = static_cast<int>(level.orbit.size());
                    level.orbit.push_back(w);
                    level.reps.push_back(compose(level.reps[k], s));
                }
        };
        close_orbit();
        for (int w = i + 1; w < n; ++w) {
            if (pc.a[w] != pc.a[i] || level.orbit_pos[w] != -1) continue;
            prefix.push_back(w);  // fix 0..i-1 pointwise, send i to w
            IsoSearch search(g, g, pc.a, pc.b);
            bool ok = true;
            for (int j = 0; j <= i && ok; ++j) ok = search.try_assign(j, prefix[j]);
            if (ok && search.extend()) {
                level.gens.emplace_back(search.image);
                close_orbit();
            }
            prefix.pop_back();
        }
        prefix.push_back(i);
        for (const Permutation& s : level.gens) all_gens.push_back(s);
        if (level.orbit.size() > 1) chain.push_back(std::move(level));
    }
    return PermGroup(n, std::move(all_gens), std::move(chain));
}

int arc_orbit_size(const DenseDigraph& g, const SearchLimits& limits) {
    int n = g.order();
    if (g.arc_count() < 1) throw std::invalid_argument("digraph has no arcs");
    PermGroup aut = automorphism_group(g, limits);
    int first = -1;
    for (int u = 0; u < n && first == -1; ++u)
        for (int v = 0; v < n; ++v)
            if (g.arc(u, v)) {
                first = u * n + v;
                break;
            }
    std::set<int> orbit{first};
    std::vector<int> frontier{first};
    while (!frontier.empty()) {
        int code = frontier.back();
        frontier.pop_back();
        for (const Permutation& s : aut.generators()) {
            int mapped = s[code / n] * n + s[code % n];
            if (orbit.insert(mapped).second) frontier.push_back(mapped);
        }
    }
    return static_cast<int>(orbit.size());
}

bool is_arc_transitive(const DenseDigraph& g, const SearchLimits& limits) {
    return arc_orbit_size(g, limits) == g.arc_count();
}

std::vector<Permutation> regular_cyclic_subgroups(const PermGroup& group, std::uint64_t budget) {
    int n = group.degree();
    std::set<Permutation> canonical;
    group.for_each_element(budget, [&](const Permutation& p) {
        if (!p.is_full_cycle()) return;
        // canonical generator of <p>: the coprime power with least image list
        Permutation best = p;
        Permutation power = p;
        for (int k = 2; k < n; ++k) {
            power = compose(power, p);
            if (std::gcd(k, n) == 1 && power < best) best = power;
        }
        canonical.insert(std::move(best));
    });
    return {canonical.begin(), canonical.end()};
}

bool is_normal_circulant(const Circulant& c, const SearchLimits& limits) {
    PermGroup aut = automorphism_group(to_dense(c), limits);
    BigInt normalizer_order =
        BigInt(c.order()) * static_cast<int>(multiplier_stabilizer(c).size());
    bool by_order = (aut.order() == normalizer_order);
    if (aut.order() <= limits.group_budget) {
        bool by_count = regular_cyclic_subgroups(aut, limits.group_budget).size() == 1;
        if (by_count != by_order)
            throw std::logic_error("normality criteria disagree for n=" +
                                   std::to_string(c.order()));
        return by_count;
    }
    return by_order;
}

}  // namespace circlex
