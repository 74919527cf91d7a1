#include "uta/schema.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uta/autc.hpp"
#include "uta/auto_ordered.hpp"

namespace uta {

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, Regex>> parse_patterns(const json& doc) {
    std::vector<std::pair<std::string, Regex>> out;
    if (!doc.contains("patterns")) return out;
    const json& p = doc.at("patterns");
    if (!p.is_object()) throw ParseError("\"patterns\" must be an object");
    for (const auto& [name, src] : p.items()) {
        if (!src.is_string()) throw ParseError("pattern " + name + " must be a string");
        out.emplace_back(name, parse_regex(src.get<std::string>()));
    }
    return out;
}

StateSet parse_state_list(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    StateSet out;
    for (const json& s : arr) {
        if (!s.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.insert(s.get<std::string>());
    }
    return out;
}

HorizontalAutomaton parse_horizontal(const json& doc, const Aut& A) {
    if (!doc.contains("horizontal"))
        throw ParseError("rewriting classes need a \"horizontal\" section");
    const json& h = doc.at("horizontal");
    HorizontalAutomaton H;
    for (const json& s : h.at("states")) H.hstates.push_back(s.get<std::string>());
    for (const json& t : h.at("transitions")) {
        HTransition tr;
        tr.from = t.at("from").get<std::string>();
        tr.to = t.at("to").get<std::string>();
        tr.guard = parse_filter(t.at("filter").get<std::string>(), A.patterns);
        H.transitions.push_back(std::move(tr));
    }
    return H;
}

Dfa parse_rule_dfa(const json& d, const std::vector<std::string>& letters) {
    int n = static_cast<int>(letters.size());
    if (d.is_string()) // counting-constraint sugar
        return compile_counting(parse_counting(d.get<std::string>()), letters);
    if (!d.is_object()) throw ParseError("ordered descriptor must be a string or object");
    int declared = d.at("states").get<int>();
    if (declared <= 0) throw ParseError("dfa needs at least one state");
    // one extra state: the implicit rejecting sink for unlisted edges
    Dfa dfa;
    dfa.alphabet = n;
    dfa.next.assign(static_cast<std::size_t>(declared) + 1,
                    std::vector<int>(static_cast<std::size_t>(n), declared));
    dfa.accepting.assign(static_cast<std::size_t>(declared) + 1, 0);
    dfa.initial = d.at("initial").get<int>();
    if (dfa.initial < 0 || dfa.initial >= declared)
        throw ParseError("dfa initial state out of range");
    for (const json& a : d.at("accepting")) {
        int s = a.get<int>();
        if (s < 0 || s >= declared) throw ParseError("dfa accepting state out of range");
        dfa.accepting[static_cast<std::size_t>(s)] = 1;
    }
    if (d.contains("edges"))
        for (const json& e : d.at("edges")) {
            int from = e.at("from").get<int>();
            int to = e.at("to").get<int>();
            std::string letter = e.at("letter").get<std::string>();
            auto it = std::find(letters.begin(), letters.end(), letter);
            if (it == letters.end()) throw ParseError("unknown letter in dfa edge: " + letter);
            if (from < 0 || from >= declared || to < 0 || to >= declared)
                throw ParseError("dfa edge state out of range");
            dfa.next[static_cast<std::size_t>(from)]
                    [static_cast<std::size_t>(it - letters.begin())] = to;
        }
    return dfa;
}

// Overlapping order filters are disambiguated by priority: each filter is
// restricted to values no earlier filter claims.
void refine_order(Aut& A) {
    std::vector<StateSet> choices{{}};
    for (const StateId& q : A.states) choices.push_back({q});
    for (std::size_t i = 1; i < A.order.size(); ++i) {
        bool overlap = false;
        for (std::size_t j = 0; j < i && !overlap; ++j)
            for (const StateSet& Q : choices)
                if (!pattern_empty(pattern_and(filter_reduce(A.order[i].second, Q),
                                               filter_reduce(A.order[j].second, Q)))) {
                    overlap = true;
                    break;
                }
        if (!overlap) continue;
        Filter prior = A.order[0].second;
        for (std::size_t j = 1; j < i; ++j)
            prior = Filter::f_or(std::move(prior), A.order[j].second);
        A.order[i].second =
            Filter::f_and(A.order[i].second, Filter::f_not(std::move(prior)));
    }
}

} // namespace

Aut load_schema(std::string_view text, const LoadOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("schema must be a JSON object");
        if (!doc.contains("format") || doc.at("format") != 1)
            throw ParseError("unsupported schema format (expected \"format\": 1)");
        std::string cls = doc.at("class").get<std::string>();

        Aut A;
        A.patterns = parse_patterns(doc);
        A.states = parse_state_list(doc.at("states"), "\"states\"");
        A.finals = parse_state_list(doc.at("final"), "\"final\"");

        if (cls == "autp") {
            A.cls = AutClass::Autp;
        } else if (cls == "auta") {
            A.cls = AutClass::Auta;
        } else if (cls == "autc") {
            A.cls = AutClass::Autc;
        } else if (cls == "auto") {
            A.cls = AutClass::AutoOrdered;
        } else {
            throw ParseError("unknown class: " + cls);
        }

        if (A.cls == AutClass::Auta || A.cls == AutClass::Autc) {
            A.horizontal =
                std::make_shared<HorizontalAutomaton>(parse_horizontal(doc, A));
            if (A.cls == AutClass::Autc)
                A.initial_h = doc.at("horizontal").at("initial").get<std::string>();
        }

        std::vector<std::string> letter_names;
        if (A.cls == AutClass::AutoOrdered) {
            if (!doc.contains("order"))
                throw ParseError("ordered class needs an \"order\" section");
            for (const json& o : doc.at("order")) {
                std::string name = o.at("name").get<std::string>();
                Filter f = parse_filter(o.at("filter").get<std::string>(), A.patterns);
                letter_names.push_back(name);
                A.order.emplace_back(std::move(name), std::move(f));
            }
            refine_order(A);
        }

        for (const json& r : doc.at("rules")) {
            Rule rule;
            rule.target = r.at("state").get<std::string>();
            const json& d = r.at("descriptor");
            switch (A.cls) {
                case AutClass::Autp:
                    rule.formula = std::make_shared<PresburgerFormula>(
                        parse_presburger(d.get<std::string>(), A.patterns));
                    break;
                case AutClass::Auta:
                case AutClass::Autc:
                    rule.h_from = d.at("from").get<std::string>();
                    rule.h_to = d.at("to").get<std::string>();
                    break;
                case AutClass::AutoOrdered:
                    rule.dfa = std::make_shared<Dfa>(parse_rule_dfa(d, letter_names));
                    break;
                case AutClass::Arity:
                    throw ParseError("unsupported class");
            }
            A.rules.push_back(std::move(rule));
        }

        check_well_formed(A);
        if (A.cls == AutClass::Autc && !opts.trust_confluent) {
            ConfluenceReport rep = autc_check(A);
            if (!rep.ok())
                throw InvalidAutomaton("horizontal automaton not provably confluent: " +
                                       rep.reason);
        }
        return A;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed schema: ") + e.what());
    }
}

Aut load_schema_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open schema file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_schema(buf.str(), opts);
}

std::string save_schema(const Aut& A) {
    json doc;
    doc["format"] = 1;
    switch (A.cls) {
        case AutClass::Autp: doc["class"] = "autp"; break;
        case AutClass::Auta: doc["class"] = "auta"; break;
        case AutClass::Autc: doc["class"] = "autc"; break;
        case AutClass::AutoOrdered: doc["class"] = "auto"; break;
        case AutClass::Arity: throw Error("arity automata have no schema form");
    }
    if (!A.patterns.empty()) {
        json p = json::object();
        for (const auto& [name, r] : A.patterns) p[name] = regex_to_string(r);
        doc["patterns"] = p;
    }
    doc["states"] = json::array();
    for (const StateId& q : A.states) doc["states"].push_back(q);
    doc["final"] = json::array();
    for (const StateId& q : A.finals) doc["final"].push_back(q);

    if (A.horizontal) {
        json h;
        h["states"] = A.horizontal->hstates;
        if (A.cls == AutClass::Autc) h["initial"] = A.initial_h;
        h["transitions"] = json::array();
        for (const HTransition& t : A.horizontal->transitions)
            h["transitions"].push_back({{"from", t.from},
                                        {"filter", filter_to_string(t.guard)},
                                        {"to", t.to}});
        doc["horizontal"] = h;
    }
    if (A.cls == AutClass::AutoOrdered) {
        doc["order"] = json::array();
        for (const auto& [name, f] : A.order)
            doc["order"].push_back({{"name", name}, {"filter", filter_to_string(f)}});
    }

    doc["rules"] = json::array();
    for (const Rule& r : A.rules) {
        json rule;
        rule["state"] = r.target;
        switch (A.cls) {
            case AutClass::Autp:
                rule["descriptor"] = presburger_to_string(*r.formula);
                break;
            case AutClass::Auta:
            case AutClass::Autc:
                rule["descriptor"] = {{"from", r.h_from}, {"to", r.h_to}};
                break;
            case AutClass::AutoOrdered: {
                json d;
                d["states"] = r.dfa->state_count();
                d["initial"] = r.dfa->initial;
                d["accepting"] = json::array();
                for (int s = 0; s < r.dfa->state_count(); ++s)
                    if (r.dfa->accepting[static_cast<std::size_t>(s)])
                        d["accepting"].push_back(s);
                d["edges"] = json::array();
                for (int s = 0; s < r.dfa->state_count(); ++s)
                    for (int a = 0; a < r.dfa->alphabet; ++a)
                        d["edges"].push_back(
                            {{"from", s},
                             {"letter", A.order[static_cast<std::size_t>(a)].first},
                             {"to", r.dfa->next[static_cast<std::size_t>(s)]
                                               [static_cast<std::size_t>(a)]}});
                rule["descriptor"] = d;
                break;
            }
            case AutClass::Arity: break;
        }
        doc["rules"].push_back(rule);
    }
    return doc.dump(2) + "\n";
}

} // namespace uta
