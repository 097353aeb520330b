#include "chowkit/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace chowkit {

namespace {

std::string partition_text(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

template <class T>
std::string joined(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

int contribution(const Partition& p) {
    int c = 0;
    for (int part : p) c += part - 1;
    return c;
}

const std::vector<Partition>& node_profiles() {
    static const std::vector<Partition> profiles{{3}, {2, 1}, {1, 1, 1}};
    return profiles;
}

FactorSpace connected_side(int genus, const Partition& node) { return {{3}, {genus}, {node}}; }

FactorSpace split_side(int genus, const Partition& big_profile) { return {{2, 1}, {genus, 0}, {big_profile, {1}}}; }

}  // namespace

std::string FactorSpace::to_string() const {
    std::string out = "H(" + joined(degrees) + ";" + joined(genera) + ";";
    for (std::size_t i = 0; i < profiles.size(); ++i) out += (i ? "," : "") + partition_text(profiles[i]);
    return out + ")";
}

int FactorSpace::genus_sum() const { return std::accumulate(genera.begin(), genera.end(), 0); }

std::string to_string(QuotientGroup q) {
    switch (q) {
        case QuotientGroup::Trivial: return "trivial";
        case QuotientGroup::Z2: return "Z2";
        case QuotientGroup::S3: return "S3";
        case QuotientGroup::S3xZ2: return "S3xZ2";
    }
    return "?";
}

std::string StratumDescriptor::to_string() const {
    return "D" + std::to_string(j) + " " + partition_text(node_profile) + ": " + side1.to_string() + " x " +
           side2.to_string() + " [" + chowkit::to_string(quotient_group) + "]";
}

bool canonical_less(const StratumDescriptor& a, const StratumDescriptor& b) {
    // (3) before (2,1) before (1,1,1)
    return std::tie(a.j, b.node_profile, a.side1, a.side2) < std::tie(b.j, a.node_profile, b.side1, b.side2);
}

int branch_count(int g) { return 2 * g + 4; }

int stability_value(const FactorSpace& f) {
    int total = 0;
    for (std::size_t i = 0; i < f.degrees.size(); ++i)
        total += 2 * f.genera[i] - 2 + 2 * f.degrees[i] - contribution(f.profiles[i]);
    return total;
}

std::optional<int> rh_genus(int j, int component_degree, int node_contribution) {
    const int twice = -2 * component_degree + j + node_contribution + 2;
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    return twice / 2;
}

int component_count(const StratumDescriptor& d) {
    return static_cast<int>(d.side1.degrees.size() + d.side2.degrees.size());
}

int glued_genus(const StratumDescriptor& d) {
    return d.side1.genus_sum() + d.side2.genus_sum() + static_cast<int>(d.node_profile.size()) - component_count(d) +
           1;
}

QuotientGroup quotient_group(const Partition& node_profile, const FactorSpace& side1, const FactorSpace& side2) {
    const bool c1 = side1.connected();
    const bool c2 = side2.connected();
    const bool equal_genus = side1.genus_sum() == side2.genus_sum();
    if (node_profile == Partition{1, 1, 1}) {
        if (c1 && c2) return equal_genus ? QuotientGroup::S3xZ2 : QuotientGroup::S3;
        if (c1 != c2) return QuotientGroup::Z2;
        return equal_genus ? QuotientGroup::Z2 : QuotientGroup::Trivial;
    }
    if (c1 && c2) return equal_genus ? QuotientGroup::Z2 : QuotientGroup::Trivial;
    return QuotientGroup::Trivial;
}

StratumDescriptor canonicalize(StratumDescriptor d) {
    for (FactorSpace* side : {&d.side1, &d.side2}) {
        std::vector<std::size_t> idx(side->degrees.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::tie(side->degrees[b], side->genera[b], side->profiles[b]) <
                   std::tie(side->degrees[a], side->genera[a], side->profiles[a]);
        });
        FactorSpace sorted;
        for (std::size_t i : idx) {
            sorted.degrees.push_back(side->degrees[i]);
            sorted.genera.push_back(side->genera[i]);
            Partition p = side->profiles[i];
            std::sort(p.rbegin(), p.rend());
            sorted.profiles.push_back(std::move(p));
        }
        *side = std::move(sorted);
    }
    std::sort(d.node_profile.rbegin(), d.node_profile.rend());
    const int b = branch_count(d.genus_total);
    if (d.j > b - d.j || (d.j == b - d.j && d.side2 < d.side1)) {
        d.j = b - d.j;
        std::swap(d.side1, d.side2);
    }
    return d;
}

std::vector<StratumDescriptor> strata_for_j(int g, int j) {
    if (g < 0) throw std::invalid_argument("negative genus");
    const int b = branch_count(g);
    std::vector<StratumDescriptor> out;
    if (j < 2 || j > b / 2) return out;
    for (const auto& node : node_profiles()) {
        const int c = contribution(node);
        // Options per side: connected, or split into degree 2 + degree 1.
        auto options = [&](int branch) {
            std::vector<FactorSpace> sides;
            if (auto gc = rh_genus(branch, 3, c)) sides.push_back(connected_side(*gc, node));
            if (node.size() >= 2) {
                Partition big(node.begin(), node.end() - 1);
                if (auto gs = rh_genus(branch, 2, contribution(big))) sides.push_back(split_side(*gs, big));
            }
            std::erase_if(sides, [](const FactorSpace& f) { return stability_value(f) < 2; });
            return sides;
        };
        for (const auto& s1 : options(j)) {
            for (const auto& s2 : options(b - j)) {
                if (node.size() == 2 && !s1.connected() && !s2.connected()) continue;
                if (node.size() == 1 && (!s1.connected() || !s2.connected())) continue;
                StratumDescriptor d{g, j, node, s1, s2, quotient_group(node, s1, s2)};
                if (glued_genus(d) != g) continue;
                d = canonicalize(std::move(d));
                if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<StratumDescriptor> enumerate_codim1(int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    std::vector<StratumDescriptor> out;
    for (int j = 2; j <= branch_count(g) / 2; ++j) {
        auto part = strata_for_j(g, j);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

StratumDescriptor oriented(const StratumDescriptor& d, int j) {
    const int b = branch_count(d.genus_total);
    if (j == d.j) return d;
    if (j != b - d.j) throw std::invalid_argument("stratum does not lie over D" + std::to_string(j));
    StratumDescriptor out = d;
    out.j = j;
    std::swap(out.side1, out.side2);
    return out;
}

std::vector<StratumDescriptor> strata_over(const std::vector<StratumDescriptor>& all, int j) {
    std::vector<StratumDescriptor> out;
    for (const auto& d : all)
        if (d.j == j || d.j == branch_count(d.genus_total) - j) out.push_back(oriented(d, j));
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

struct Component {
    int degree;
    int genus;
    Partition profile;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// All ways to hand the node points (indexed) to the components of a side so
// that each component receives points summing to its degree.
std::vector<std::vector<int>> point_assignments(const Partition& degrees, const Partition& node) {
    std::vector<std::vector<int>> out;
    std::vector<int> owner(node.size(), 0);
    const int k = static_cast<int>(degrees.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < node.size(); ++i) total *= static_cast<std::size_t>(k);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        std::vector<int> load(degrees.size(), 0);
        for (std::size_t t = 0; t < node.size(); ++t) {
            owner[t] = static_cast<int>(rest % static_cast<std::size_t>(k));
            rest /= static_cast<std::size_t>(k);
            load[owner[t]] += node[t];
        }
        if (std::equal(load.begin(), load.end(), degrees.begin())) out.push_back(owner);
    }
    return out;
}

// Every side configuration with `branch` simple branch points and the given
// node assignment; genera range over 0..g.
std::vector<std::vector<Component>> side_configurations(const Partition& degrees, const Partition& node,
                                                        const std::vector<int>& owner, int branch, int g) {
    std::vector<Partition> profiles(degrees.size());
    for (std::size_t t = 0; t < node.size(); ++t) profiles[owner[t]].push_back(node[t]);
    std::vector<std::vector<Component>> out;
    std::vector<int> genera(degrees.size(), 0);
    while (true) {
        int branch_sum = 0;
        bool ok = true;
        for (std::size_t i = 0; i < degrees.size() && ok; ++i) {
            const int ji = 2 * genera[i] - 2 + 2 * degrees[i] - contribution(profiles[i]);
            if (ji < 0) ok = false;
            if (degrees[i] == 1 && (genera[i] != 0 || ji != 0)) ok = false;
            branch_sum += ji;
        }
        if (ok && branch_sum == branch) {
            std::vector<Component> side;
            for (std::size_t i = 0; i < degrees.size(); ++i) side.push_back({degrees[i], genera[i], profiles[i]});
            out.push_back(std::move(side));
        }
        std::size_t i = 0;
        while (i < genera.size() && genera[i] == g) genera[i++] = 0;
        if (i == genera.size()) break;
        ++genera[i];
    }
    return out;
}

FactorSpace to_factor(const std::vector<Component>& side) {
    FactorSpace f;
    for (const auto& c : side) {
        f.degrees.push_back(c.degree);
        f.genera.push_back(c.genus);
        f.profiles.push_back(c.profile);
    }
    return f;
}

}  // namespace

std::vector<StratumDescriptor> oracle_enumerate(int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (g > kOracleGenusLimit)
        throw OracleGuardError("oracle_enumerate is limited to g <= " + std::to_string(kOracleGenusLimit));
    const int b = branch_count(g);
    const std::vector<Partition> degree_partitions{{3}, {2, 1}, {1, 1, 1}};
    std::set<std::string> seen;
    std::vector<StratumDescriptor> out;
    for (int j = 0; j <= b; ++j) {
        for (const auto& node : node_profiles()) {
            for (const auto& d1 : degree_partitions) {
                for (const auto& d2 : degree_partitions) {
                    for (const auto& own1 : point_assignments(d1, node)) {
                        for (const auto& own2 : point_assignments(d2, node)) {
                            const auto sides1 = side_configurations(d1, node, own1, j, g);
                            const auto sides2 = side_configurations(d2, node, own2, b - j, g);
                            if (sides1.empty() || sides2.empty()) continue;
                            const int v1 = static_cast<int>(d1.size());
                            UnionFind uf(v1 + static_cast<int>(d2.size()));
                            for (std::size_t t = 0; t < node.size(); ++t) uf.unite(own1[t], v1 + own2[t]);
                            bool connected = true;
                            for (int v = 0; v < static_cast<int>(uf.parent.size()); ++v)
                                if (uf.find(v) != uf.find(0)) connected = false;
                            if (!connected) continue;
                            for (const auto& s1 : sides1) {
                                for (const auto& s2 : sides2) {
                                    StratumDescriptor d{g, j, node, to_factor(s1), to_factor(s2),
                                                        QuotientGroup::Trivial};
                                    if (stability_value(d.side1) < 2 || stability_value(d.side2) < 2) continue;
                                    if (glued_genus(d) != g) continue;
                                    d = canonicalize(std::move(d));
                                    d.quotient_group = quotient_group(d.node_profile, d.side1, d.side2);
                                    if (seen.insert(d.to_string()).second) out.push_back(std::move(d));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::optional<int> factor_family(const FactorSpace& f, int g) {
    const auto in_range = [&](int gp, int lo) { return gp >= lo && gp <= g; };
    if (f.degrees == Partition{3} && f.genera.size() == 1 && f.profiles.size() == 1) {
        const int gp = f.genera[0];
        if (!in_range(gp, 0)) return std::nullopt;
        if (f.profiles[0] == Partition{3}) return 1;
        if (f.profiles[0] == Partition{2, 1}) return 2;
        if (f.profiles[0] == Partition{1, 1, 1}) return 3;
        return std::nullopt;
    }
    if (f.degrees == Partition{2, 1} && f.genera.size() == 2 && f.genera[1] == 0 && f.profiles.size() == 2 &&
        f.profiles[1] == Partition{1}) {
        const int gp = f.genera[0];
        if (f.profiles[0] == Partition{2} && in_range(gp, 1)) return 4;
        if (f.profiles[0] == Partition{1, 1} && in_range(gp, 0)) return 5;
    }
    return std::nullopt;
}

}  // namespace chowkit
