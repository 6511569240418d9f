#include "posetcomp/poset_file.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "posetcomp/error.hpp"

namespace posetcomp {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace

Poset parse_poset(std::istream& in, const std::string& default_name) {
    std::string name = default_name;
    bool named = false;
    std::vector<std::string> elements;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, std::string>> relations;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> opens;
    std::size_t first_le = 0, first_opens = 0;

    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tok = tokens(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        const std::vector<std::string> args(tok.begin() + 1, tok.end());
        if (kw == "name") {
            if (args.size() != 1) fail(lineno, "expected one name");
            if (named) fail(lineno, "duplicate name directive");
            name = args[0];
            named = true;
        } else if (kw == "elements") {
            if (args.empty()) fail(lineno, "expected at least one name");
            for (const auto& a : args) {
                if (!declared.insert(a).second) fail(lineno, "duplicate element '" + a + "'");
                elements.push_back(a);
            }
        } else if (kw == "le") {
            if (args.size() != 2) fail(lineno, "expected two names");
            for (const auto& a : args)
                if (!declared.count(a)) fail(lineno, "unknown element '" + a + "'");
            relations.emplace_back(args[0], args[1]);
            if (!first_le) first_le = lineno;
        } else if (kw == "opens") {
            for (const auto& a : args)
                if (!declared.count(a)) fail(lineno, "unknown element '" + a + "'");
            opens.emplace_back(lineno, args);
            if (!first_opens) first_opens = lineno;
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
        if (first_le && first_opens) fail(lineno, "cannot mix 'le' and 'opens'");
    }
    if (elements.empty()) fail(0, "no elements declared");

    Poset p;
    if (!opens.empty()) {
        FiniteTopology t;
        t.points = elements;
        t.opens.push_back({});
        std::vector<Element> all(elements.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
        t.opens.push_back(all);
        for (const auto& [line, names] : opens) {
            std::vector<Element> u;
            for (const auto& n : names)
                u.push_back(static_cast<Element>(std::find(elements.begin(), elements.end(), n) - elements.begin()));
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            t.opens.push_back(u);
        }
        t = t.canonical();
        if (!t.is_valid()) fail(first_opens, "open sets are not closed under union and intersection");
        try {
            p = poset_from_topology(t);
        } catch (const Error& e) {
            fail(first_opens, e.what());
        }
    } else {
        try {
            p = poset_from_relations(elements, relations);
        } catch (const Error& e) {
            fail(first_le ? first_le : 1, e.what());
        }
    }
    p.name = name;
    return p;
}

Poset parse_poset_string(const std::string& text, const std::string& default_name) {
    std::istringstream is(text);
    return parse_poset(is, default_name);
}

Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse_error, "line 0: cannot open '" + path + "'");
    return parse_poset(in, std::filesystem::path(path).stem().string());
}

std::string format_poset(const Poset& p) {
    std::ostringstream os;
    os << "name " << p.name << "\nelements";
    for (const auto& l : p.labels()) os << ' ' << l;
    os << '\n';
    const auto n = static_cast<Element>(p.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (!p.less(x, y)) continue;
            bool cover = true;
            for (Element z = 0; z < n && cover; ++z) cover = !(p.less(x, z) && p.less(z, y));
            if (cover) os << "le " << p.label(x) << ' ' << p.label(y) << '\n';
        }
    return os.str();
}

}  // namespace posetcomp
