#include "scalsup/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scalsup/errors.hpp"

namespace scalsup {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kModelFormat = "scalsup-model/1";
constexpr const char* kReportFormat = "scalsup-report/1";

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InvalidModel(where + ": missing field '" + key + "'");
    return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw InvalidModel(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidModel(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(as_string(x, where));
    return out;
}

Generator parse_generator(const std::string& name, const json& j, const EventAlphabet& sigma) {
    const auto where = "generator '" + name + "'";
    const auto states = as_strings(field(j, "states", where), where + ".states");
    if (states.empty()) throw InvalidModel(where + ": needs at least one state");
    const auto& transitions = field(j, "transitions", where);
    if (!transitions.is_array()) throw InvalidModel(where + ".transitions: expected an array");

    std::set<Event> events;
    if (j.contains("events")) {
        for (const auto& e : as_strings(j.at("events"), where + ".events")) events.insert(e);
    } else {
        for (const auto& t : transitions) {
            if (t.is_array() && t.size() == 3 && t[1].is_string()) events.insert(t[1].get<std::string>());
        }
    }
    for (const auto& e : events) {
        if (!sigma.contains(e)) throw InvalidModel(where + ": event '" + e + "' is not in the alphabet");
    }

    Generator g(sigma.restricted(events));
    std::map<std::string, StateId> ids;
    for (const auto& s : states) {
        if (!ids.emplace(s, g.add_state(s)).second) throw InvalidModel(where + ": duplicate state '" + s + "'");
    }
    auto state = [&](const json& x) {
        const auto s = as_string(x, where);
        const auto it = ids.find(s);
        if (it == ids.end()) throw InvalidModel(where + ": unknown state '" + s + "'");
        return it->second;
    };
    for (const auto& t : transitions) {
        if (!t.is_array() || t.size() != 3) throw InvalidModel(where + ": transitions are [from, event, to] triples");
        const auto e = as_string(t[1], where);
        if (!g.alphabet().contains(e)) throw InvalidModel(where + ": event '" + e + "' is not in its alphabet");
        g.add_transition(state(t[0]), e, state(t[2]));
    }
    g.set_initial(state(field(j, "initial", where)));
    return g;
}

ordered_json generator_json(const Generator& raw) {
    const Generator g = trim(raw);
    ordered_json j;
    j["events"] = std::vector<std::string>(g.alphabet().events().begin(), g.alphabet().events().end());
    const auto uo = g.alphabet().unobservable();
    j["unobservable"] = std::vector<std::string>(uo.begin(), uo.end());
    j["states"] = g.num_states();
    j["initial"] = g.initial();
    ordered_json transitions = ordered_json::array();
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) transitions.push_back(ordered_json::array({s, e, t}));
    }
    j["transitions"] = std::move(transitions);
    return j;
}

ordered_json named_generator_json(const Generator& g) {
    ordered_json j;
    j["events"] = std::vector<std::string>(g.alphabet().events().begin(), g.alphabet().events().end());
    std::vector<std::string> names;
    for (StateId s = 0; s < g.num_states(); ++s) names.push_back("q" + std::to_string(s));
    j["states"] = names;
    j["initial"] = names.at(g.initial());
    ordered_json transitions = ordered_json::array();
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) transitions.push_back(ordered_json::array({names[s], e, names[t]}));
    }
    j["transitions"] = std::move(transitions);
    return j;
}

ordered_json verdict_json(const ConditionVerdict& v) {
    ordered_json j;
    j["name"] = v.name;
    j["holds"] = v.holds;
    j["method"] = to_string(v.method);
    if (!v.witness.empty()) {
        ordered_json w;
        for (const auto& [k, val] : v.witness) w[k] = val;
        j["witness"] = std::move(w);
    }
    if (!v.details.empty()) {
        ordered_json d;
        for (const auto& [k, val] : v.details) d[k] = val;
        j["details"] = std::move(d);
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

ordered_json comparison_json(const Comparison& c) {
    ordered_json j;
    j["safety"] = c.safety.holds;
    if (c.safety.counterexample) j["safety_counterexample"] = to_string(*c.safety.counterexample);
    j["permissiveness"] = c.permissiveness.holds;
    if (c.permissiveness.counterexample)
        j["permissiveness_counterexample"] = to_string(*c.permissiveness.counterexample);
    j["equal"] = c.equal();
    j["state_counts"] = {{"ssup", c.ssup_states}, {"sup", c.sup_states}, {"plant", c.plant_states}};
    return j;
}

} // namespace

MultiAgentModel parse_model(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidModel(std::string("model is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidModel("model document must be a JSON object");
    if (doc.contains("format") && doc.at("format") != kModelFormat)
        throw InvalidModel("unsupported model format " + doc.at("format").dump());

    const auto& alpha = field(doc, "alphabet", "model");
    const auto events = as_strings(field(alpha, "events", "alphabet"), "alphabet.events");
    const auto unobservable =
        alpha.contains("unobservable") ? as_strings(alpha.at("unobservable"), "alphabet.unobservable")
                                       : std::vector<std::string>{};
    if (std::set<std::string>(events.begin(), events.end()).size() != events.size())
        throw InvalidModel("alphabet.events contains duplicates");
    const auto sigma = EventAlphabet::from_unobservable(events, unobservable);

    const auto& gens = field(doc, "generators", "model");
    if (!gens.is_object()) throw InvalidModel("generators: expected an object keyed by name");
    std::map<std::string, Generator> generators;
    for (const auto& [name, g] : gens.items()) generators.emplace(name, parse_generator(name, g, sigma));
    auto lookup = [&](const std::string& name) -> const Generator& {
        const auto it = generators.find(name);
        if (it == generators.end()) throw InvalidModel("unknown generator '" + name + "'");
        return it->second;
    };

    const auto& rel = field(doc, "relabeling", "model");
    if (!rel.is_object()) throw InvalidModel("relabeling: expected an object mapping events to events");
    std::map<Event, Event> table;
    for (const auto& [from, to] : rel.items()) table.emplace(from, as_string(to, "relabeling." + from));
    RelabelingMap r(sigma, std::move(table));

    std::vector<AgentGroup> groups;
    const auto& gs = field(doc, "groups", "model");
    if (!gs.is_array() || gs.empty()) throw InvalidModel("groups: expected a nonempty array");
    for (const auto& g : gs) {
        AgentGroup group;
        group.name = as_string(field(g, "name", "group"), "group.name");
        for (const auto& a : as_strings(field(g, "agents", "group '" + group.name + "'"), "group.agents"))
            group.agents.push_back(lookup(a));
        if (g.contains("k")) {
            if (!g.at("k").is_number_integer() || g.at("k").get<long long>() < 1)
                throw InvalidModel("group '" + group.name + "': k must be a positive integer");
            group.k = g.at("k").get<std::size_t>();
        } else {
            group.k = std::min<std::size_t>(2, group.agents.size());
        }
        groups.push_back(std::move(group));
    }

    ModelOptions opts;
    if (doc.contains("flags")) {
        const auto& flags = doc.at("flags");
        if (flags.contains("sef_mode")) {
            const auto mode = as_string(flags.at("sef_mode"), "flags.sef_mode");
            if (mode == "on") opts.sef_mode = SefMode::on;
            else if (mode == "off") opts.sef_mode = SefMode::off;
            else if (mode == "auto") opts.sef_mode = SefMode::automatic;
            else throw InvalidModel("flags.sef_mode must be on, off or auto");
        }
        if (flags.contains("state_budget")) {
            if (!flags.at("state_budget").is_number_integer() || flags.at("state_budget").get<long long>() < 1)
                throw InvalidModel("flags.state_budget must be a positive integer");
            opts.state_budget = flags.at("state_budget").get<std::size_t>();
        }
    }
    return MultiAgentModel(std::move(groups), std::move(r), lookup(as_string(field(doc, "spec", "model"), "spec")),
                           opts);
}

MultiAgentModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidModel("cannot open model file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string serialize_model(const MultiAgentModel& m) {
    ordered_json doc;
    doc["format"] = kModelFormat;
    const auto& sigma = m.sigma();
    doc["alphabet"]["events"] = std::vector<std::string>(sigma.events().begin(), sigma.events().end());
    const auto uo = sigma.unobservable();
    doc["alphabet"]["unobservable"] = std::vector<std::string>(uo.begin(), uo.end());
    ordered_json gens;
    ordered_json groups = ordered_json::array();
    for (const auto& g : m.groups()) {
        std::vector<std::string> names;
        for (std::size_t j = 0; j < g.agents.size(); ++j) {
            names.push_back(g.name + "_" + std::to_string(j + 1));
            gens[names.back()] = named_generator_json(g.agents[j]);
        }
        groups.push_back({{"name", g.name}, {"agents", names}, {"k", g.k}});
    }
    gens["spec"] = named_generator_json(m.spec());
    doc["generators"] = std::move(gens);
    ordered_json rel;
    for (const auto& [from, to] : m.relabeling().table()) rel[from] = to;
    doc["relabeling"] = std::move(rel);
    doc["groups"] = std::move(groups);
    doc["spec"] = "spec";
    doc["flags"] = {{"sef_mode", to_string(m.options().sef_mode)}, {"state_budget", m.options().state_budget}};
    return doc.dump(2) + "\n";
}

std::string generator_to_json(const Generator& g) { return generator_json(g).dump(); }

std::string verdict_to_json(const ConditionVerdict& v) { return verdict_json(v).dump(); }

std::string comparison_to_json(const Comparison& c) { return comparison_json(c).dump(); }

std::string report_to_json(const MultiAgentModel& m, const SynthesisReport& rep, const ReportOptions& opts) {
    ordered_json doc;
    doc["format"] = kReportFormat;

    ordered_json sup;
    sup["relabeled_supervisor"] = generator_json(rep.relabeled_supervisor);
    // SSUP_o shares the state set of RSUP_o; each template-labeled transition
    // stands for one transition per preimage event.
    const Generator rsup = trim(rep.relabeled_supervisor);
    ordered_json ssup;
    ssup["states"] = rsup.num_states();
    ssup["initial"] = rsup.initial();
    ssup["transitions"] = generator_json(rsup)["transitions"];
    ssup["expansion"] = "inverse relabeling: each template event stands for all of its preimages";
    sup["scalable_supervisor"] = std::move(ssup);
    doc["supervisor"] = std::move(sup);

    ordered_json templates = ordered_json::array();
    for (std::size_t i = 0; i < rep.templates.size(); ++i) {
        templates.push_back({{"group", m.groups().at(i).name},
                             {"k", m.groups().at(i).k},
                             {"generator", generator_json(rep.templates[i])}});
    }
    doc["templates"] = std::move(templates);
    doc["relabeled_plant"] = generator_json(rep.relabeled_plant);
    doc["relabeled_spec"] = generator_json(rep.relabeled_spec);
    if (opts.expand_scalable_supervisor) doc["scalable_supervisor_expanded"] = generator_json(rep.scalable_supervisor);

    ordered_json touched;
    for (std::size_t i = 0; i < rep.agents_touched.size(); ++i) touched[m.groups().at(i).name] = rep.agents_touched[i];
    doc["agents_touched"] = std::move(touched);

    ordered_json verdicts = ordered_json::array();
    for (const auto& v : rep.condition_verdicts) verdicts.push_back(verdict_json(v));
    doc["verdicts"] = std::move(verdicts);
    if (rep.comparison) doc["comparison"] = comparison_json(*rep.comparison);
    doc["warnings"] = rep.warnings;
    doc["notes"] = ordered_json::array(
        {"supervisors are supremal relatively observable sublanguages; controllability is not modeled",
         "the relabeled supervisor is computed over R(E) intersected with L(M), with that language as the reference"});
    return doc.dump(2) + "\n";
}

} // namespace scalsup
