#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "scalsup/conditions.hpp"
#include "scalsup/errors.hpp"
#include "scalsup/model_io.hpp"

namespace scalsup::cli {

namespace {

constexpr std::size_t kDefaultRocLength = 5;
constexpr std::size_t kDefaultInclusionLength = 6;

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ResourceLimit& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

std::pair<std::string, std::size_t> parse_k(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidModel("--k expects GROUP=INT, got '" + spec + "'");
    const auto value = spec.substr(eq + 1);
    std::size_t used = 0;
    long long k = 0;
    try {
        k = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty() || k < 1)
        throw InvalidModel("--k expects a positive integer for group '" + spec.substr(0, eq) + "'");
    return {spec.substr(0, eq), static_cast<std::size_t>(k)};
}

ConditionVerdict chain_verdict(const MultiAgentModel& m) {
    try {
        return check_observability_chain(m);
    } catch (const PreconditionViolated& e) {
        ConditionVerdict v{"observability_chain", false, CheckMethod::exact, {}, {}, {}};
        v.note = std::string("hypothesis not met: ") + e.what();
        return v;
    }
}

} // namespace

MultiAgentModel load_with_flags(const CommonFlags& flags) {
    auto m = load_model(flags.model);
    if (flags.state_budget || flags.sef) {
        auto opts = m.options();
        if (flags.state_budget) opts.state_budget = *flags.state_budget;
        if (flags.sef) opts.sef_mode = *flags.sef;
        m = MultiAgentModel(m.groups(), m.relabeling(), m.spec(), opts);
    }
    for (const auto& spec : flags.k) {
        const auto [group, k] = parse_k(spec);
        m = m.with_k(group, k);
    }
    return m;
}

int cmd_synth(const CommonFlags& flags, const std::string& out_path, bool expand, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        const auto m = load_with_flags(flags);
        const auto rep = synthesize_scalable(m);
        const auto doc = report_to_json(m, rep, ReportOptions{expand});
        if (out_path.empty() || out_path == "-") {
            out << doc;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw InvalidModel("cannot write '" + out_path + "'");
            file << doc;
        }
        for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
        return static_cast<int>(kPass);
    });
}

int cmd_verify(const CommonFlags& flags, const std::string& condition, std::optional<std::size_t> max_len,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto m = load_with_flags(flags);
        const bool all = condition == "all";
        std::vector<ConditionVerdict> verdicts;
        if (all || condition == "sef") verdicts.push_back(check_sef(m));
        if (all || condition == "normality") verdicts.push_back(check_normality(m));
        if (all || condition == "theorem1" || condition == "safety") {
            try {
                verdicts.push_back(check_safety_condition(m));
            } catch (const PreconditionViolated& e) {
                throw ResourceLimit(e.what());
            }
        }
        if (all || condition == "roc") {
            verdicts.push_back(check_roc(m, CheckMode::structural, max_len.value_or(kDefaultRocLength)));
            if (max_len) verdicts.push_back(check_roc(m, CheckMode::bounded, *max_len));
        }
        if (all || condition == "lroc") verdicts.push_back(check_lroc(m));
        if (all || condition == "m_in_rg") {
            verdicts.push_back(check_m_in_rg(m, CheckMode::structural, max_len.value_or(kDefaultInclusionLength)));
            if (max_len) verdicts.push_back(check_m_in_rg(m, CheckMode::bounded, *max_len));
        }
        if (all || condition == "theorem3" || condition == "chain") verdicts.push_back(chain_verdict(m));
        if (verdicts.empty()) throw InvalidModel("unknown condition '" + condition + "'");

        bool ok = true;
        for (const auto& v : verdicts) {
            out << verdict_to_json(v) << "\n";
            ok = ok && v.holds;
        }
        return static_cast<int>(ok ? kPass : kFail);
    });
}

int cmd_compare(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto m = load_with_flags(flags);
        const auto rep = synthesize_scalable(m);
        const auto c = compare_supervisors(m, rep);
        out << comparison_to_json(c) << "\n";
        return static_cast<int>(c.safety.holds ? kPass : kFail);
    });
}

int cmd_enum(const CommonFlags& flags, const std::string& object, std::size_t max_len, std::ostream& out,
             std::ostream& err) {
    return guarded(err, [&] {
        const auto m = load_with_flags(flags);
        Generator g;
        if (object == "plant") g = build_plant(m);
        else if (object == "relabeled_plant") g = build_relabeled_plant(m);
        else if (object == "spec") g = m.spec();
        else if (object == "ssup") g = synthesize_scalable(m).scalable_supervisor;
        else if (object == "sup") g = synthesize_monolithic(m);
        else throw InvalidModel("unknown object '" + object + "'");
        for (const auto& w : closed_language_upto(g, max_len)) out << to_string(w) << "\n";
        return static_cast<int>(kPass);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalable supervisor synthesis for multi-agent discrete-event systems", "scalsup"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string sef;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--model", flags.model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--state-budget", flags.state_budget, "Maximum states of any intermediate automaton")
            ->check(CLI::PositiveNumber);
        sub->add_option("--k", flags.k, "Override template parallelism, GROUP=INT (repeatable)");
        sub->add_option("--sef", sef, "Shared-event-free assumption")->check(CLI::IsMember({"on", "off", "auto"}));
    };

    std::string out_path;
    bool expand = false;
    auto* synth = app.add_subcommand("synth", "Synthesize the scalable supervisor and write a report");
    common(synth);
    synth->add_option("--out", out_path, "Report path (stdout if omitted)");
    synth->add_flag("--expand", expand, "Also emit the supervisor over the full alphabet");

    std::string condition = "all";
    std::optional<std::size_t> max_len;
    auto* verify = app.add_subcommand("verify", "Check the sufficient conditions");
    common(verify);
    verify->add_option("--condition", condition, "Condition to check")
        ->check(CLI::IsMember({"sef", "normality", "theorem1", "safety", "roc", "lroc", "m_in_rg", "theorem3", "chain", "all"}));
    verify->add_option("--max-len", max_len, "Also run the bounded checks up to this length");

    auto* compare = app.add_subcommand("compare", "Compare the scalable and monolithic supervisors");
    common(compare);

    std::string object;
    std::size_t enum_len = 4;
    auto* enumerate = app.add_subcommand("enum", "Print a bounded closed language in shortlex order");
    common(enumerate);
    enumerate->add_option("object", object, "Automaton to enumerate")
        ->required()
        ->check(CLI::IsMember({"plant", "relabeled_plant", "spec", "ssup", "sup"}));
    enumerate->add_option("--max-len", enum_len, "Maximum string length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? static_cast<int>(kPass) : static_cast<int>(kInvalid);
    }
    if (sef == "on") flags.sef = SefMode::on;
    else if (sef == "off") flags.sef = SefMode::off;
    else if (sef == "auto") flags.sef = SefMode::automatic;

    if (synth->parsed()) return cmd_synth(flags, out_path, expand, out, err);
    if (verify->parsed()) return cmd_verify(flags, condition, max_len, out, err);
    if (compare->parsed()) return cmd_compare(flags, out, err);
    return cmd_enum(flags, object, enum_len, out, err);
}

} // namespace scalsup::cli
