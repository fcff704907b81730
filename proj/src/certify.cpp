#include "berncert/certify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace berncert {

namespace {

std::mutex g_chain_mu;
std::map<std::string, HandChainFn>& chain_registry() {
    static std::map<std::string, HandChainFn> reg;
    return reg;
}

nlohmann::ordered_json rat_to_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

// Decodes a flat cell number into the per-axis cell index, matching the
// lexicographic (last axis fastest) order used by subdivide.
std::vector<int> cell_of_flat(const std::vector<int>& splits, int flat) {
    std::vector<int> cell(splits.size(), 0);
    for (size_t k = splits.size(); k-- > 0;) {
        cell[k] = flat % splits[k];
        flat /= splits[k];
    }
    return cell;
}

Rational rat_from_json(const nlohmann::json& j) {
    return rat_normalize(Integer(j.at("num").get<std::string>()),
                         Integer(j.at("den").get<std::string>()));
}

std::vector<int> tensor_strides(const std::vector<int>& degrees) {
    std::vector<int> strides(degrees.size());
    int acc = 1;
    for (int k = static_cast<int>(degrees.size()) - 1; k >= 0; --k) {
        strides[static_cast<size_t>(k)] = acc;
        acc *= degrees[static_cast<size_t>(k)] + 1;
    }
    return strides;
}

// Axis whose Bernstein coefficients vary the most between adjacent entries;
// that is where bisection buys the fastest enclosure shrink.
int widest_axis(const BernsteinTensor& t) {
    const auto& deg = t.degrees;
    const size_t d = deg.size();
    const auto strides = tensor_strides(deg);
    std::vector<Rational> spread(d, Rational(0));
    for (size_t i = 0; i < t.beta.size(); ++i) {
        for (size_t k = 0; k < d; ++k) {
            const int nk = deg[k] + 1;
            const int ik = static_cast<int>(i / static_cast<size_t>(strides[k])) % nk;
            if (ik + 1 >= nk) continue;
            Rational diff = t.beta[i + static_cast<size_t>(strides[k])] - t.beta[i];
            if (diff < 0) diff = -diff;
            if (diff > spread[k]) spread[k] = diff;
        }
    }
    size_t best = 0;
    for (size_t k = 1; k < d; ++k)
        if (spread[k] > spread[best]) best = k;
    return static_cast<int>(best);
}

struct WitnessHit {
    std::vector<Rational> point;
    Rational value;
};

bool violates(const Rational& value, const Rational& bound, bool strict) {
    return strict ? value >= bound : value > bound;
}

// Exact disproof attempt: box corners (where Bernstein coefficients equal the
// polynomial) in lexicographic order, then the box center.
std::optional<WitnessHit> find_witness(const MultiPoly& p, const BernsteinTensor& t,
                                       const Rational& bound, bool strict) {
    const size_t d = t.degrees.size();
    const auto strides = tensor_strides(t.degrees);
    std::vector<int> choice(d, 0);
    while (true) {
        size_t flat = 0;
        std::vector<Rational> point(d);
        for (size_t k = 0; k < d; ++k) {
            const int ik = choice[k] ? t.degrees[k] : 0;
            flat += static_cast<size_t>(ik) * static_cast<size_t>(strides[k]);
            point[k] = choice[k] ? t.box.iv[k].second : t.box.iv[k].first;
        }
        if (violates(t.beta[flat], bound, strict)) return WitnessHit{point, t.beta[flat]};
        size_t k = d;
        while (k > 0 && choice[k - 1] == 1) choice[--k] = 0;
        if (k == 0) break;
        choice[k - 1] = 1;
    }
    std::vector<Rational> center(d);
    for (size_t k = 0; k < d; ++k)
        center[k] = (t.box.iv[k].first + t.box.iv[k].second) / 2;
    Rational cv = poly_eval(p, center);
    if (violates(cv, bound, strict)) return WitnessHit{center, cv};
    return std::nullopt;
}

Rational tensor_max(const BernsteinTensor& t) {
    Rational m = t.beta.front();
    for (const auto& b : t.beta)
        if (b > m) m = b;
    return m;
}

std::vector<int> node_path(const Certificate& cert, int node) {
    std::vector<int> parent(cert.nodes.size(), -1);
    for (size_t i = 0; i < cert.nodes.size(); ++i)
        for (int c : cert.nodes[i].children)
            if (c >= 0 && static_cast<size_t>(c) < cert.nodes.size()) parent[static_cast<size_t>(c)] = static_cast<int>(i);
    std::vector<int> path;
    for (int cur = node; cur >= 0; cur = parent[static_cast<size_t>(cur)]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string path_str(const Certificate& cert, int node) {
    std::ostringstream os;
    auto path = node_path(cert, node);
    for (size_t i = 0; i < path.size(); ++i) os << (i ? ">" : "") << path[i];
    return os.str();
}

ReplayResult reject(const Certificate& cert, int node, const std::string& what) {
    ReplayResult r;
    r.accepted = false;
    r.node = node;
    std::ostringstream os;
    if (node >= 0)
        os << "node " << node << " (path " << path_str(cert, node) << "): " << what;
    else
        os << what;
    r.reason = os.str();
    return r;
}

}  // namespace

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::Split: return "split";
        case Verdict::Failed: return "failed";
        case Verdict::Undecided: return "undecided";
    }
    throw std::logic_error("unreachable verdict");
}

Verdict verdict_parse(const std::string& s) {
    if (s == "proved") return Verdict::Proved;
    if (s == "split") return Verdict::Split;
    if (s == "failed") return Verdict::Failed;
    if (s == "undecided") return Verdict::Undecided;
    throw std::invalid_argument("unknown verdict: " + s);
}

void register_hand_chain(const std::string& name, HandChainFn fn) {
    if (!fn) throw std::invalid_argument("hand chain must be callable");
    std::lock_guard<std::mutex> lock(g_chain_mu);
    chain_registry()[name] = std::move(fn);
}

bool hand_chain_registered(const std::string& name) {
    std::lock_guard<std::mutex> lock(g_chain_mu);
    return chain_registry().count(name) > 0;
}

static HandChainFn chain_lookup(const std::string& name) {
    std::lock_guard<std::mutex> lock(g_chain_mu);
    auto it = chain_registry().find(name);
    if (it == chain_registry().end())
        throw std::invalid_argument("hand chain not registered: " + name);
    return it->second;
}

std::string objective_hash(const MultiPoly& p) {
    const std::string bytes = poly_to_json(p).dump();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

Certificate certify_upper_bound(const MultiPoly& p, const Box& box, const Rational& bound,
                                const SubdivisionPolicy& policy, bool strict) {
    for (const auto& name : policy.hand_chains)
        if (!hand_chain_registered(name))
            throw std::invalid_argument("hand chain not registered: " + name);
    if (policy.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");

    Certificate cert;
    cert.objective = p;
    cert.objective_hash = objective_hash(p);
    cert.bound = bound;
    cert.strict = strict;
    cert.degrees.resize(p.var_count());
    for (size_t k = 0; k < p.var_count(); ++k)
        cert.degrees[k] = p.true_degree(p.vars()[k]);

    cert.nodes.emplace_back();
    cert.nodes[0].box = box;

    std::vector<int> level{0};
    int depth = 0;
    bool failed_any = false;

    while (!level.empty()) {
        std::vector<BernsteinTensor> tensors(level.size());
        const int n = static_cast<int>(level.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (worker_count() > 1 && n > 1)
#endif
        for (int i = 0; i < n; ++i)
            tensors[static_cast<size_t>(i)] = to_bernstein_with(
                p, cert.degrees, cert.nodes[static_cast<size_t>(level[static_cast<size_t>(i)])].box,
                ExecMode::Serial);

        std::vector<std::pair<int, std::vector<int>>> to_split;
        for (int i = 0; i < n; ++i) {
            CertNode& node = cert.nodes[static_cast<size_t>(level[static_cast<size_t>(i)])];
            const BernsteinTensor& t = tensors[static_cast<size_t>(i)];
            node.max_beta = tensor_max(t);
            if (!violates(node.max_beta, bound, strict)) {
                node.verdict = Verdict::Proved;
                continue;
            }
            if (auto hit = find_witness(p, t, bound, strict)) {
                node.verdict = Verdict::Failed;
                node.witness_point = std::move(hit->point);
                node.witness_value = hit->value;
                failed_any = true;
                continue;
            }
            bool discharged = false;
            for (const auto& name : policy.hand_chains) {
                if (chain_lookup(name)(p, node.box, bound)) {
                    node.verdict = Verdict::Proved;
                    node.subproof = name;
                    discharged = true;
                    break;
                }
            }
            if (discharged) continue;
            if (depth < policy.max_depth) {
                std::vector<int> splits;
                if (static_cast<size_t>(depth) < policy.schedule.size()) {
                    splits = policy.schedule[static_cast<size_t>(depth)];
                    if (splits.size() != box.dim())
                        throw std::invalid_argument("schedule entry arity mismatch");
                } else {
                    splits.assign(box.dim(), 1);
                    splits[static_cast<size_t>(widest_axis(t))] = 2;
                }
                node.verdict = Verdict::Split;
                node.splits = splits;
                to_split.emplace_back(level[static_cast<size_t>(i)], std::move(splits));
            } else {
                node.verdict = Verdict::Undecided;
            }
        }

        std::vector<int> next_level;
        if (failed_any) {
            // A disproof ends the run; pending splits become residual leaves.
            for (auto& [ni, splits] : to_split) {
                cert.nodes[static_cast<size_t>(ni)].verdict = Verdict::Undecided;
                cert.nodes[static_cast<size_t>(ni)].splits.clear();
            }
        } else {
            for (auto& [ni, splits] : to_split) {
                int cells = 1;
                for (int s : splits) cells *= s;
                for (int c = 0; c < cells; ++c) {
                    const int child = static_cast<int>(cert.nodes.size());
                    cert.nodes.emplace_back();
                    cert.nodes.back().box = subbox_of(cert.nodes[static_cast<size_t>(ni)].box,
                                                      splits, cell_of_flat(splits, c));
                    cert.nodes[static_cast<size_t>(ni)].children.push_back(child);
                    next_level.push_back(child);
                }
            }
        }
        level = std::move(next_level);
        ++depth;
    }

    if (failed_any) {
        cert.overall = Verdict::Failed;
    } else {
        cert.overall = Verdict::Proved;
        for (const auto& node : cert.nodes)
            if (node.verdict == Verdict::Undecided) cert.overall = Verdict::Undecided;
    }
    return cert;
}

ReplayResult certificate_replay(const Certificate& cert) {
    if (cert.version != 1) return reject(cert, -1, "unsupported certificate version");
    if (cert.nodes.empty()) return reject(cert, -1, "certificate has no nodes");
    if (objective_hash(cert.objective) != cert.objective_hash)
        return reject(cert, -1, "objective hash mismatch");
    const size_t dim = cert.objective.var_count();
    if (cert.degrees.size() != dim) return reject(cert, -1, "degree list arity mismatch");
    for (size_t k = 0; k < dim; ++k)
        if (cert.degrees[k] < cert.objective.true_degree(cert.objective.vars()[k]))
            return reject(cert, -1, "recorded degrees below true degrees");

    // Structure first: one root, every other node the child of exactly one
    // split node, child boxes exactly tiling the parent per recorded splits.
    std::vector<int> ref_count(cert.nodes.size(), 0);
    for (size_t i = 0; i < cert.nodes.size(); ++i) {
        const CertNode& node = cert.nodes[i];
        if (node.box.dim() != dim) return reject(cert, static_cast<int>(i), "box arity mismatch");
        if (node.verdict == Verdict::Split) {
            if (node.splits.size() != dim)
                return reject(cert, static_cast<int>(i), "split arity mismatch");
            int cells = 1;
            for (int s : node.splits) {
                if (s < 1) return reject(cert, static_cast<int>(i), "split factor below 1");
                cells *= s;
            }
            if (static_cast<int>(node.children.size()) != cells)
                return reject(cert, static_cast<int>(i), "child count does not match splits");
            int prev = static_cast<int>(i);
            for (int c = 0; c < cells; ++c) {
                const int child = node.children[static_cast<size_t>(c)];
                if (child <= prev || static_cast<size_t>(child) >= cert.nodes.size())
                    return reject(cert, static_cast<int>(i), "child indices not ascending/in range");
                prev = child;
                ref_count[static_cast<size_t>(child)]++;
                if (!(cert.nodes[static_cast<size_t>(child)].box ==
                      subbox_of(node.box, node.splits, cell_of_flat(node.splits, c))))
                    return reject(cert, child, "child box does not tile its parent cell");
            }
        } else {
            if (!node.children.empty() || !node.splits.empty())
                return reject(cert, static_cast<int>(i), "leaf carries children or splits");
        }
    }
    if (ref_count[0] != 0) return reject(cert, 0, "root appears as a child");
    for (size_t i = 1; i < cert.nodes.size(); ++i)
        if (ref_count[i] != 1)
            return reject(cert, static_cast<int>(i), "node not referenced by exactly one parent");

    const int n = static_cast<int>(cert.nodes.size());
    std::vector<Rational> recomputed(cert.nodes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (worker_count() > 1 && n > 1)
#endif
    for (int i = 0; i < n; ++i) {
        BernsteinTensor t = to_bernstein_with(cert.objective, cert.degrees,
                                              cert.nodes[static_cast<size_t>(i)].box,
                                              ExecMode::Serial);
        Rational m = t.beta.front();
        for (const auto& b : t.beta)
            if (b > m) m = b;
        recomputed[static_cast<size_t>(i)] = std::move(m);
    }

    bool any_failed = false;
    bool any_undecided = false;
    for (size_t i = 0; i < cert.nodes.size(); ++i) {
        const CertNode& node = cert.nodes[i];
        if (recomputed[i] != node.max_beta)
            return reject(cert, static_cast<int>(i), "stored Bernstein max does not replay");
        switch (node.verdict) {
            case Verdict::Proved:
                if (node.subproof.empty()) {
                    if (violates(node.max_beta, cert.bound, cert.strict))
                        return reject(cert, static_cast<int>(i),
                                      "Bernstein max exceeds bound yet node claims proved");
                } else {
                    if (!hand_chain_registered(node.subproof))
                        return reject(cert, static_cast<int>(i),
                                      "subproof not registered: " + node.subproof);
                    if (!chain_lookup(node.subproof)(cert.objective, node.box, cert.bound))
                        return reject(cert, static_cast<int>(i),
                                      "subproof does not re-verify: " + node.subproof);
                }
                break;
            case Verdict::Failed: {
                any_failed = true;
                if (node.witness_point.size() != dim)
                    return reject(cert, static_cast<int>(i), "witness arity mismatch");
                for (size_t k = 0; k < dim; ++k)
                    if (node.witness_point[k] < node.box.iv[k].first ||
                        node.witness_point[k] > node.box.iv[k].second)
                        return reject(cert, static_cast<int>(i), "witness outside its box");
                if (poly_eval(cert.objective, node.witness_point) != node.witness_value)
                    return reject(cert, static_cast<int>(i), "witness value does not replay");
                if (!violates(node.witness_value, cert.bound, cert.strict))
                    return reject(cert, static_cast<int>(i), "witness does not violate the bound");
                break;
            }
            case Verdict::Split:
                break;
            case Verdict::Undecided:
                any_undecided = true;
                break;
        }
    }

    Verdict overall = Verdict::Proved;
    if (any_failed)
        overall = Verdict::Failed;
    else if (any_undecided)
        overall = Verdict::Undecided;
    if (overall != cert.overall)
        return reject(cert, -1, "overall verdict does not match node verdicts");

    ReplayResult ok;
    ok.accepted = true;
    return ok;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["version"] = cert.version;
    j["objective"] = poly_to_json(cert.objective);
    j["objective_hash"] = cert.objective_hash;
    j["bound"] = rat_to_json(cert.bound);
    j["strict"] = cert.strict;
    j["degrees"] = cert.degrees;
    j["overall"] = verdict_str(cert.overall);
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& node : cert.nodes) {
        nlohmann::ordered_json nj;
        nlohmann::ordered_json box = nlohmann::ordered_json::array();
        for (const auto& [lo, hi] : node.box.iv)
            box.push_back({rat_str(lo), rat_str(hi)});
        nj["box"] = std::move(box);
        nj["max_beta"] = rat_to_json(node.max_beta);
        nj["verdict"] = verdict_str(node.verdict);
        if (node.verdict == Verdict::Split) {
            nj["splits"] = node.splits;
            nj["children"] = node.children;
        }
        if (!node.subproof.empty()) nj["subproof"] = node.subproof;
        if (node.verdict == Verdict::Failed) {
            nlohmann::ordered_json w;
            nlohmann::ordered_json pt = nlohmann::ordered_json::array();
            for (const auto& c : node.witness_point) pt.push_back(rat_str(c));
            w["point"] = std::move(pt);
            w["value"] = rat_to_json(node.witness_value);
            nj["witness"] = std::move(w);
        }
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate cert;
    cert.version = j.at("version").get<int>();
    cert.objective = poly_from_json(j.at("objective"));
    cert.objective_hash = j.at("objective_hash").get<std::string>();
    cert.bound = rat_from_json(j.at("bound"));
    cert.strict = j.at("strict").get<bool>();
    cert.degrees = j.at("degrees").get<std::vector<int>>();
    cert.overall = verdict_parse(j.at("overall").get<std::string>());
    for (const auto& nj : j.at("nodes")) {
        CertNode node;
        for (const auto& ivj : nj.at("box")) {
            if (ivj.size() != 2) throw std::invalid_argument("box interval needs two endpoints");
            node.box.iv.emplace_back(rat_parse(ivj.at(0).get<std::string>()),
                                     rat_parse(ivj.at(1).get<std::string>()));
        }
        node.max_beta = rat_from_json(nj.at("max_beta"));
        node.verdict = verdict_parse(nj.at("verdict").get<std::string>());
        if (nj.contains("splits")) node.splits = nj.at("splits").get<std::vector<int>>();
        if (nj.contains("children")) node.children = nj.at("children").get<std::vector<int>>();
        if (nj.contains("subproof")) node.subproof = nj.at("subproof").get<std::string>();
        if (nj.contains("witness")) {
            for (const auto& c : nj.at("witness").at("point"))
                node.witness_point.push_back(rat_parse(c.get<std::string>()));
            node.witness_value = rat_from_json(nj.at("witness").at("value"));
        }
        cert.nodes.push_back(std::move(node));
    }
    return cert;
}

std::optional<std::pair<int, Rational>> worst_residual(const Certificate& cert) {
    std::optional<std::pair<int, Rational>> worst;
    for (size_t i = 0; i < cert.nodes.size(); ++i) {
        const CertNode& node = cert.nodes[i];
        if (node.verdict != Verdict::Undecided) continue;
        if (!worst || node.max_beta > worst->second)
            worst = std::make_pair(static_cast<int>(i), node.max_beta);
    }
    return worst;
}

}  // namespace berncert
