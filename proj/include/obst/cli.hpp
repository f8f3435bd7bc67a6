#pragma once

#include <optional>
#include <string>

#include "obst/bounds.hpp"
#include "obst/experiments.hpp"
#include "obst/io.hpp"
#include "obst/minimize.hpp"
#include "obst/svg.hpp"

namespace obst::cli {

inline std::string real_str(const Real& v) { return v.str(25); }

inline json pair_json(int u, int w) { return json::array({u + 1, w + 1}); }

inline json verification_json(const VerificationReport& report) {
    json j;
    j["valid"] = report.valid;
    j["pairs"] = json::array();
    for (const PairStatus& p : report.pairs) {
        json e;
        e["pair"] = pair_json(p.u, p.w);
        e["edge"] = p.edge;
        e["blocked"] = p.blocked;
        j["pairs"].push_back(e);
    }
    j["violations"] = json::array();
    for (const Violation& v : report.violations) {
        json e;
        e["pair"] = pair_json(v.u, v.w);
        e["kind"] =
            v.kind == Violation::Kind::edge_blocked ? "edge-blocked" : "non-edge-visible";
        j["violations"].push_back(e);
    }
    return j;
}

inline json faces_json(const std::vector<int>& faces) {
    json j = json::array();
    for (int f : faces) j.push_back(f);
    return j;
}

inline json face_polygons_json(const Arrangement& arr, const std::vector<int>& faces) {
    json j = json::object();
    for (int f : faces) {
        if (f == 0) {
            j["0"] = "outer";
            continue;
        }
        json poly = json::array();
        for (const Point& p : arr.face_polygon(f)) poly.push_back(detail::point_to_json(p));
        j[std::to_string(f)] = poly;
    }
    return j;
}

inline Instance certificate_instance(const ObstacleRepresentation& rep) {
    Instance inst;
    inst.graph = rep.graph;
    inst.points = rep.embedding.points;
    inst.obstacles = rep.obstacles;
    return inst;
}

struct CommandOutput {
    json report;
    std::optional<json> instance; // perturb: the rewritten instance
    std::optional<std::string> svg;
};

inline CommandOutput cmd_verify(const Instance& inst) {
    ObstacleRepresentation rep{inst.graph, inst.embedding(), inst.obstacles, nullptr};
    const VerificationReport report = verify(rep);
    CommandOutput out;
    out.report["command"] = "verify";
    out.report["results"] = verification_json(report);
    return out;
}

inline CommandOutput cmd_minimize(const Instance& inst, const std::string& mode,
                                  std::uint64_t seed, bool want_svg) {
    const MinimizeMode m = mode == "vertex_clusters" ? MinimizeMode::vertex_clusters
                           : mode == "faces"
                               ? MinimizeMode::faces
                               : throw SchemaError("mode must be faces or vertex_clusters");
    const MinimizeResult res = min_obstacles_fixed(inst.graph, inst.embedding(), m);
    CommandOutput out;
    out.report["command"] = "minimize";
    out.report["seed"] = seed;
    out.report["mode"] = mode;
    json results;
    results["count"] = res.count;
    results["clusters"] = json::array();
    for (const auto& cluster : res.clusters) results["clusters"].push_back(faces_json(cluster));
    results["faces"] = faces_json(res.chosen_faces());
    results["face_polygons"] = face_polygons_json(*res.arrangement, res.chosen_faces());
    results["face_count"] = static_cast<int>(res.arrangement->faces.size());
    results["crossings"] = res.arrangement->crossing_count;
    results["certificate"] = instance_to_json(certificate_instance(res.certificate));
    out.report["results"] = results;
    if (want_svg) out.svg = render_svg(res.certificate);
    return out;
}

inline CommandOutput cmd_search(const Instance& inst, int budget, std::uint64_t seed,
                                bool want_svg) {
    SearchConfig cfg;
    cfg.budget = budget;
    cfg.seed = seed;
    const SearchResult res = obstacle_number_search(inst.graph, cfg);
    CommandOutput out;
    out.report["command"] = "search";
    out.report["seed"] = seed;
    out.report["budget"] = budget;
    json results;
    results["best_count"] = res.best.count;
    results["samples_used"] = res.samples_used;
    results["best_so_far"] = res.best_so_far;
    results["faces"] = faces_json(res.best.chosen_faces());
    results["certificate"] = instance_to_json(certificate_instance(res.best.certificate));
    out.report["results"] = results;
    if (want_svg) out.svg = render_svg(res.best.certificate);
    return out;
}

inline json sot_single_json(const PointSequence& points, const CanonicalSextupleSequence& canon) {
    json j;
    const SuperOrderTypeVector sigma = super_order_type(points, canon);
    j["n"] = static_cast<int>(points.size());
    j["r"] = canon.size();
    j["sigma"] = sigma.to_chars();
    j["simple"] = sigma.simple();
    j["pstar_sign"] = to_int(pstar_sign(points, canon));
    std::string ot;
    for (TriState t : order_type(points).values) ot.push_back(tri_char(t));
    j["order_type"] = ot;
    return j;
}

inline CommandOutput cmd_sot(const Instance& a, const std::optional<Instance>& b) {
    CommandOutput out;
    out.report["command"] = "sot";
    const PointSequence pa = a.embedding().points;
    const CanonicalSextupleSequence canon =
        enumerate_admissible(static_cast<int>(pa.size()));
    out.report["results"]["a"] = sot_single_json(pa, canon);
    if (b) {
        const PointSequence pb = b->embedding().points;
        if (pb.size() != pa.size())
            throw PreconditionError("the two instances have different vertex counts");
        out.report["results"]["b"] = sot_single_json(pb, canon);
        const SuperOrderTypeVector sa = super_order_type(pa, canon);
        const SuperOrderTypeVector sb = super_order_type(pb, canon);
        out.report["results"]["equal"] = sa == sb;
        if (sa != sb) {
            std::size_t l = 0;
            while (sa.values[l] == sb.values[l]) ++l;
            const SextupleIndices& s = canon.entries[l];
            json diff;
            diff["index"] = l;
            diff["sextuple"] = json::array(
                {s.i1 + 1, s.i2 + 1, s.j1 + 1, s.j2 + 1, s.k1 + 1, s.k2 + 1});
            diff["a"] = to_int(sa.values[l]);
            diff["b"] = to_int(sb.values[l]);
            out.report["results"]["first_difference"] = diff;
        }
    }
    return out;
}

inline CommandOutput cmd_perturb(const Instance& inst, std::uint64_t seed) {
    const Embedding emb = inst.embedding();
    std::optional<PerturbContext> ctx;
    if (!inst.obstacles.empty()) ctx = PerturbContext{inst.graph, inst.obstacles};
    const PerturbResult res =
        perturb_to_simple(emb.points, seed, ctx ? &*ctx : nullptr);
    CommandOutput out;
    out.report["command"] = "perturb";
    out.report["seed"] = seed;
    json results;
    results["changed"] = res.changed;
    results["steps"] = res.steps;
    results["degenerate_counts"] = res.degenerate_counts;
    Instance rewritten = inst;
    rewritten.points = res.points;
    results["instance"] = instance_to_json(rewritten);
    out.report["results"] = results;
    out.instance = instance_to_json(rewritten);
    return out;
}

inline CommandOutput cmd_slab(const Instance& inst, int k) {
    const SlabReportData rep = slab_report(inst.graph, inst.embedding(), k);
    CommandOutput out;
    out.report["command"] = "slab";
    out.report["k"] = k;
    json results;
    results["m"] = rep.m;
    results["whole_count"] = rep.whole_count;
    results["whole_faces"] = faces_json(rep.whole_faces);
    results["slabs"] = json::array();
    for (const SlabEntry& s : rep.slabs) {
        json e;
        e["vertices"] = json::array();
        for (int v : s.vertices) e["vertices"].push_back(v + 1);
        e["induced_edges"] = s.induced_edges;
        e["min_count"] = s.min_count;
        e["faces"] = faces_json(s.faces);
        e["whole_obstacles_inside"] = s.whole_obstacles_inside;
        results["slabs"].push_back(e);
    }
    out.report["results"] = results;
    return out;
}

inline CommandOutput cmd_census(int n, int samples, std::uint64_t seed) {
    const CensusResult res = census(n, samples, seed);
    CommandOutput out;
    out.report["command"] = "census";
    out.report["seed"] = seed;
    out.report["n"] = n;
    out.report["samples"] = samples;
    json results;
    results["r"] = res.r;
    results["distinct_types"] = res.distinct;
    results["new_type_at_sample"] = res.new_type_at;
    out.report["results"] = results;
    return out;
}

inline CommandOutput cmd_bounds(long long n, double c, double alpha, double enc) {
    BoundConfig cfg;
    cfg.c = c;
    cfg.alpha = alpha;
    cfg.enc = enc;
    CommandOutput out;
    out.report["command"] = "bounds";
    out.report["n"] = n;
    out.report["c"] = c;
    out.report["alpha"] = alpha;
    out.report["enc"] = enc;
    out.report["log_convention"] = "log2 (probability chain in natural log)";
    json results;
    const Lemma1Report rep = lemma1_report(n, cfg);
    json slab;
    slab["k"] = rep.k;
    slab["m"] = rep.m;
    slab["mu"] = real_str(rep.mu);
    slab["delta"] = real_str(rep.delta);
    slab["chain_log"] = real_str(rep.chain_log);
    slab["chain_log_factorwise"] = real_str(rep.chain_log_factorwise);
    slab["chernoff_log"] = real_str(rep.chernoff_log);
    slab["chernoff_trivial"] = rep.chernoff_trivial;
    slab["obstacle_lower_bound"] = real_str(rep.obstacle_lower_bound);
    slab["lower_bound_degenerate"] = rep.lower_bound_degenerate;
    results["slab_chain"] = slab;
    const HhatResult h = hhat(n, cfg);
    json hj;
    hj["h"] = h.h;
    hj["flag"] = h.flag == HhatResult::Flag::ok
                     ? "ok"
                     : h.flag == HhatResult::Flag::none ? "none" : "unbounded";
    results["hhat"] = hj;
    const WnBound wn = wn_lower_bound(n, cfg);
    json wj;
    wj["value"] = real_str(wn.value);
    wj["hhat_arg"] = wn.hhat_arg;
    wj["hhat_value"] = wn.hhat_value;
    wj["flag"] = wn.flag == HhatResult::Flag::ok
                     ? "ok"
                     : wn.flag == HhatResult::Flag::none ? "none" : "unbounded";
    results["wn_lower_bound"] = wj;
    out.report["results"] = results;
    return out;
}

inline CommandOutput cmd_ordertype_gap(int n, int budget, std::uint64_t seed) {
    const OrderTypeGapResult res = order_type_gap_search(n, budget, seed);
    CommandOutput out;
    out.report["command"] = "ordertype-gap";
    out.report["seed"] = seed;
    out.report["n"] = n;
    out.report["budget"] = budget;
    json results;
    results["found"] = res.found;
    results["trials_used"] = res.trials_used;
    if (res.found) {
        json pair;
        Instance ia;
        ia.graph = res.graph;
        ia.points = res.points_a;
        Instance ib;
        ib.graph = res.graph;
        ib.points = res.points_b;
        pair["instance_a"] = instance_to_json(ia);
        pair["instance_b"] = instance_to_json(ib);
        pair["count_a"] = res.count_a;
        pair["count_b"] = res.count_b;
        const SuperOrderTypeVector sa = super_order_type(res.points_a);
        const SuperOrderTypeVector sb = super_order_type(res.points_b);
        pair["super_order_equal"] = sa == sb;
        pair["order_type_equal"] = order_type(res.points_a) == order_type(res.points_b);
        results["pair"] = pair;
    }
    out.report["results"] = results;
    return out;
}

} // namespace obst::cli
