#pragma once

// Suite driver, separation searches, report serialization, refutation
// re-checks. Included at the end of harness.hpp.

namespace absorb {

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::vector<TheoremReport> reports;
    int instances = 0;
};

/// Verify a suite over a corpus. Instances are independent; with threads > 1
/// they are processed in parallel and the merged output is sorted by
/// (instance id, theorem id), so results are schedule-independent.
inline SuiteResult run_suite(const std::vector<InstanceSpec>& corpus,
                             const std::vector<std::string>& suite, const HarnessBounds& bounds,
                             int threads = 1) {
    SuiteResult result;
    result.instances = static_cast<int>(corpus.size());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, std::max<std::size_t>(corpus.size(), 1));
    std::vector<std::vector<TheoremReport>> buckets(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
        for (std::size_t i = static_cast<std::size_t>(t); i < corpus.size();
             i += static_cast<std::size_t>(threads)) {
            CompiledInstance ci = compile(corpus[i]);
            auto reports = verify_theorems(ci, suite, bounds);
            auto& bucket = buckets[static_cast<std::size_t>(t)];
            bucket.insert(bucket.end(), std::make_move_iterator(reports.begin()),
                          std::make_move_iterator(reports.end()));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& b : buckets)
        result.reports.insert(result.reports.end(), std::make_move_iterator(b.begin()),
                              std::make_move_iterator(b.end()));
    std::sort(result.reports.begin(), result.reports.end(),
              [](const TheoremReport& a, const TheoremReport& b) {
                  if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                  return a.theorem_id < b.theorem_id;
              });
    return result;
}

inline json report_to_json(const TheoremReport& r, bool timings = false) {
    json j;
    j["instance"] = r.instance_id;
    j["theorem"] = r.theorem_id;
    j["status"] = to_string(r.status);
    if (!r.evidence.is_null() && !(r.evidence.is_object() && r.evidence.empty()))
        j["evidence"] = r.evidence;
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline json suite_result_to_json(const SuiteResult& res, const HarnessBounds& bounds,
                                 bool timings = false) {
    json j;
    j["version"] = kSchemaVersion;
    j["bounds"] = bounds_to_json(bounds);
    j["instances"] = res.instances;
    std::map<std::string, std::array<long long, 3>> counts;
    for (const auto& r : res.reports) {
        auto& c = counts[r.theorem_id];
        c[static_cast<std::size_t>(r.status)]++;
    }
    json summary = json::object();
    for (const auto& [id, c] : counts)
        summary[id] = json{{"verified", c[0]}, {"refuted", c[1]}, {"inapplicable", c[2]}};
    j["summary"] = summary;
    json reps = json::array();
    for (const auto& r : res.reports) reps.push_back(report_to_json(r, timings));
    j["reports"] = reps;
    return j;
}

inline long long count_refuted(const SuiteResult& res) {
    long long n = 0;
    for (const auto& r : res.reports)
        if (r.status == TheoremStatus::refuted) ++n;
    return n;
}

/// Human-readable summary, rendered from the JSON report (never computed
/// separately).
inline std::string render_report_text(const json& report) {
    std::ostringstream os;
    os << "instances: " << report.at("instances").get<long long>() << "\n";
    os << "theorem                 verified    refuted  inapplicable\n";
    for (auto it = report.at("summary").begin(); it != report.at("summary").end(); ++it) {
        const auto& c = it.value();
        os << it.key();
        for (std::size_t i = it.key().size(); i < 24; ++i) os << ' ';
        std::string v = std::to_string(c.at("verified").get<long long>());
        std::string r = std::to_string(c.at("refuted").get<long long>());
        std::string in = std::to_string(c.at("inapplicable").get<long long>());
        os << std::string(8 > v.size() ? 8 - v.size() : 0, ' ') << v;
        os << std::string(11 > r.size() ? 11 - r.size() : 0, ' ') << r;
        os << std::string(14 > in.size() ? 14 - in.size() : 0, ' ') << in << "\n";
    }
    long long refuted = 0;
    for (const auto& r : report.at("reports"))
        if (r.at("status").get<std::string>() == "refuted") ++refuted;
    if (refuted > 0) {
        os << "\nREFUTATIONS:\n";
        for (const auto& r : report.at("reports"))
            if (r.at("status").get<std::string>() == "refuted")
                os << "  " << r.at("instance").get<std::string>() << " / "
                   << r.at("theorem").get<std::string>() << ": " << r.at("evidence").dump()
                   << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Class-separation search
// ---------------------------------------------------------------------------

struct SeparationResult {
    std::string pred_a;
    std::string pred_b;
    bool found = false;
    std::string instance_id;
    json detail;       // hit payload or exhaustion note
    long long searched = 0;
};

/**
 * First corpus instance (deterministic order) whose target satisfies predA
 * but fails predB (with predB's gate satisfied). Never asserts nonexistence
 * beyond the corpus: an exhausted search reports how many instances it saw.
 */
inline SeparationResult separate_classes(SubmodulePredicate pred_a, SubmodulePredicate pred_b,
                                         const std::vector<InstanceSpec>& corpus) {
    SeparationResult out;
    out.pred_a = to_string(pred_a);
    out.pred_b = to_string(pred_b);
    for (const auto& spec : corpus) {
        if (!spec.module || !spec.target || spec.target->kind != "submodule") continue;
        CompiledInstance ci = compile(spec);
        if (!ci.submodule || !ci.submodule->is_proper()) continue;
        ++out.searched;
        auto a = check_submodule_predicate(ci.module, *ci.submodule,
                                           submodule_predicate_uses_s(pred_a)
                                               ? ci.multset
                                               : std::optional<MultiplicativeSet>{},
                                           pred_a);
        if (!a.ok()) continue;
        auto b = check_submodule_predicate(ci.module, *ci.submodule,
                                           submodule_predicate_uses_s(pred_b)
                                               ? ci.multset
                                               : std::optional<MultiplicativeSet>{},
                                           pred_b);
        if (b.applicable && !b.holds) {
            out.found = true;
            out.instance_id = spec.id;
            out.detail = json{{"instance", instance_to_json(spec)},
                              {"witness_s_for_a", a.witness_s ? json(*a.witness_s) : json()},
                              {"counterexample_for_b", b.counterexample}};
            return out;
        }
    }
    out.detail = json{{"exhausted", true}, {"searched", out.searched}};
    return out;
}

inline json separation_to_json(const SeparationResult& s) {
    json j;
    j["pair"] = json::array({s.pred_a, s.pred_b});
    j["result"] = s.found ? "found" : "exhausted";
    j["searched"] = s.searched;
    if (s.found) j["instance"] = s.instance_id;
    j["detail"] = s.detail;
    return j;
}

// ---------------------------------------------------------------------------
// Refutation re-check
// ---------------------------------------------------------------------------

/**
 * Replays a report from its serialized form alone: the embedded instance
 * recipe is recompiled (fresh objects, fresh caches) and the theorem re-run.
 * Returns true when the recorded status is reproduced.
 */
inline bool recheck_report(const json& serialized, const HarnessBounds& bounds) {
    const std::string theorem = serialized.at("theorem").get<std::string>();
    const std::string status = serialized.at("status").get<std::string>();
    json spec_json;
    if (serialized.contains("evidence") && serialized.at("evidence").contains("instance"))
        spec_json = serialized.at("evidence").at("instance");
    else
        throw input_error("recheck_report: no embedded instance recipe");
    InstanceSpec spec = parse_instance(spec_json);
    CompiledInstance ci = compile(spec);
    // strip the avoidance reading suffix if present
    std::string id = theorem;
    if (auto pos = id.find('['); pos != std::string::npos) id = id.substr(0, pos);
    auto reports = verify_theorems(ci, {id}, bounds);
    return !reports.empty() && to_string(reports.front().status) == status;
}

}  // namespace absorb
