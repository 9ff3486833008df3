#include "kq/diagram.hpp"

#include "kq/errors.hpp"

#include <json.hpp>

#include <numeric>
#include <set>

namespace kq {

std::string kind_name(DiagramKind k) {
    switch (k) {
    case DiagramKind::classical: return "classical";
    case DiagramKind::solid_torus: return "solid_torus";
    case DiagramKind::lens: return "lens";
    }
    return "?";
}

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError(std::string("unknown field '") + it.key() + "' in " + what);
}

int get_int(const json& j, const char* key, const char* what) {
    if (!j.contains(key))
        throw ParseError(std::string("missing field '") + key + "' in " + what);
    if (!j[key].is_number_integer())
        throw ParseError(std::string("field '") + key + "' in " + what + " must be an integer");
    return j[key].get<int>();
}

int get_sign(const json& j, const char* what) {
    int s = get_int(j, "sign", what);
    if (s != 1 && s != -1)
        throw ParseError(std::string("sign in ") + what + " must be 1 or -1");
    return s;
}

} // namespace

Diagram parse_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("diagram JSON must be an object");
    require_keys(j, {"kind", "arcs", "crossings", "axis", "surgery"}, "diagram");

    Diagram d;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("diagram needs a string 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "classical")
        d.kind = DiagramKind::classical;
    else if (kind == "solid_torus")
        d.kind = DiagramKind::solid_torus;
    else if (kind == "lens")
        d.kind = DiagramKind::lens;
    else
        throw ParseError("unknown diagram kind '" + kind + "'");

    d.arcs = get_int(j, "arcs", "diagram");

    if (!j.contains("crossings") || !j["crossings"].is_array())
        throw ParseError("diagram needs a 'crossings' array");
    for (const auto& c : j["crossings"]) {
        if (!c.is_object())
            throw ParseError("crossing must be an object");
        require_keys(c, {"under_in", "over", "under_out", "sign"}, "crossing");
        Crossing x;
        x.under_in = get_int(c, "under_in", "crossing");
        x.over = get_int(c, "over", "crossing");
        x.under_out = get_int(c, "under_out", "crossing");
        x.sign = get_sign(c, "crossing");
        d.crossings.push_back(x);
    }

    if (j.contains("axis")) {
        if (d.kind == DiagramKind::classical)
            throw ParseError("classical diagrams have no 'axis'");
        if (!j["axis"].is_array())
            throw ParseError("'axis' must be an array");
        for (const auto& a : j["axis"]) {
            if (!a.is_object())
                throw ParseError("axis pass must be an object");
            require_keys(a, {"under_in", "under_out", "sign"}, "axis pass");
            AxisPass p;
            p.under_in = get_int(a, "under_in", "axis pass");
            p.under_out = get_int(a, "under_out", "axis pass");
            p.sign = get_sign(a, "axis pass");
            d.axis.push_back(p);
        }
    }

    if (j.contains("surgery")) {
        if (d.kind != DiagramKind::lens)
            throw ParseError("'surgery' is only valid for lens diagrams");
        const auto& s = j["surgery"];
        if (!s.is_object())
            throw ParseError("'surgery' must be an object");
        require_keys(s, {"p", "q"}, "surgery");
        Surgery su;
        su.p = get_int(s, "p", "surgery");
        su.q = get_int(s, "q", "surgery");
        d.surgery = su;
    }

    validate_diagram(d);
    return d;
}

void validate_diagram(const Diagram& d) {
    if (d.arcs < 1)
        throw ValidationError("diagram needs at least one arc");
    auto check_arc = [&](int a, const char* what) {
        if (a < 1 || a > d.arcs)
            throw ValidationError(std::string("arc id ") + std::to_string(a) + " out of range in " + what);
    };
    std::vector<int> in_count(static_cast<size_t>(d.arcs) + 1, 0);
    std::vector<int> out_count(static_cast<size_t>(d.arcs) + 1, 0);
    for (const auto& c : d.crossings) {
        check_arc(c.under_in, "crossing");
        check_arc(c.over, "crossing");
        check_arc(c.under_out, "crossing");
        ++in_count[static_cast<size_t>(c.under_in)];
        ++out_count[static_cast<size_t>(c.under_out)];
    }
    for (const auto& p : d.axis) {
        check_arc(p.under_in, "axis pass");
        check_arc(p.under_out, "axis pass");
        ++in_count[static_cast<size_t>(p.under_in)];
        ++out_count[static_cast<size_t>(p.under_out)];
    }
    for (int a = 1; a <= d.arcs; ++a) {
        if (in_count[static_cast<size_t>(a)] > 1)
            throw ValidationError("arc " + std::to_string(a) + " dives under more than once");
        if (out_count[static_cast<size_t>(a)] > 1)
            throw ValidationError("arc " + std::to_string(a) + " emerges more than once");
    }
    if (d.kind == DiagramKind::classical && !d.axis.empty())
        throw ValidationError("classical diagram cannot have axis passes");
    if (d.kind == DiagramKind::lens) {
        if (!d.surgery)
            throw SurgeryError("lens diagram needs surgery coefficients");
        long long g = std::gcd(d.surgery->p, d.surgery->q);
        if (g != 1)
            throw SurgeryError("surgery coefficients (" + std::to_string(d.surgery->p) + ", " +
                               std::to_string(d.surgery->q) + ") are not coprime");
    } else if (d.surgery) {
        throw ValidationError("surgery coefficients are only valid for lens diagrams");
    }
}

std::string serialize_diagram(const Diagram& d) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(d.kind);
    j["arcs"] = d.arcs;
    auto crossings = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings) {
        nlohmann::ordered_json x;
        x["under_in"] = c.under_in;
        x["over"] = c.over;
        x["under_out"] = c.under_out;
        x["sign"] = c.sign;
        crossings.push_back(std::move(x));
    }
    j["crossings"] = std::move(crossings);
    if (d.kind != DiagramKind::classical) {
        auto axis = nlohmann::ordered_json::array();
        for (const auto& p : d.axis) {
            nlohmann::ordered_json x;
            x["under_in"] = p.under_in;
            x["under_out"] = p.under_out;
            x["sign"] = p.sign;
            axis.push_back(std::move(x));
        }
        j["axis"] = std::move(axis);
    }
    if (d.kind == DiagramKind::lens && d.surgery) {
        nlohmann::ordered_json s;
        s["p"] = d.surgery->p;
        s["q"] = d.surgery->q;
        j["surgery"] = std::move(s);
    }
    return j.dump(2);
}

int component_count(const Diagram& d) {
    // succ[a] = the arc that a continues into after its under-event, 0 if a
    // never dives under (then its component closes without another event).
    std::vector<int> succ(static_cast<size_t>(d.arcs) + 1, 0);
    std::vector<bool> is_target(static_cast<size_t>(d.arcs) + 1, false);
    auto add = [&](int in, int out) {
        succ[static_cast<size_t>(in)] = out;
        is_target[static_cast<size_t>(out)] = true;
    };
    for (const auto& c : d.crossings)
        add(c.under_in, c.under_out);
    for (const auto& p : d.axis)
        add(p.under_in, p.under_out);

    std::vector<bool> visited(static_cast<size_t>(d.arcs) + 1, false);
    int components = 0;
    // Chains that start at an arc nobody emerges into close up into loops.
    for (int a = 1; a <= d.arcs; ++a) {
        if (visited[static_cast<size_t>(a)] || is_target[static_cast<size_t>(a)])
            continue;
        ++components;
        int cur = a;
        while (cur != 0 && !visited[static_cast<size_t>(cur)]) {
            visited[static_cast<size_t>(cur)] = true;
            cur = succ[static_cast<size_t>(cur)];
        }
    }
    // Remaining unvisited arcs sit on genuine cycles of the successor map.
    for (int a = 1; a <= d.arcs; ++a) {
        if (visited[static_cast<size_t>(a)])
            continue;
        ++components;
        int cur = a;
        while (!visited[static_cast<size_t>(cur)]) {
            visited[static_cast<size_t>(cur)] = true;
            cur = succ[static_cast<size_t>(cur)];
        }
    }
    return components;
}

int winding_number(const Diagram& d) {
    if (d.kind == DiagramKind::classical)
        throw WrongKind("winding number needs a solid-torus or lens diagram");
    int w = 0;
    for (const auto& p : d.axis)
        w += p.sign;
    return w;
}

} // namespace kq
