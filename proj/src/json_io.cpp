#include "json_io.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace cacti {

std::string poly_to_json(const MVPolynomial& p) {
    nlohmann::json j;
    j["vars"] = p.vars();
    j["terms"] = nlohmann::json::array();
    for (const auto& [exps, coef] : p.canonical_terms())
        j["terms"].push_back({{"exps", exps}, {"coef", rat_to_string(coef)}});
    return j.dump();
}

MVPolynomial poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MVPolynomial p = MVPolynomial::constant(0);
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("exps").get<std::vector<int>>();
        if (exps.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
        Rational coef = rat_from_string(term.at("coef").get<std::string>());
        MVPolynomial mono = MVPolynomial::constant(coef);
        for (size_t i = 0; i < vars.size(); ++i)
            if (exps[i] != 0) mono = mono * MVPolynomial::monomial(vars[i], exps[i]);
        p = p + mono;
    }
    return p;
}

namespace {

bool valid_symbol(const std::string& s) {
    if (s.empty() || !std::islower((unsigned char)s[0])) return false;
    for (char c : s)
        if (!std::islower((unsigned char)c) && !std::isdigit((unsigned char)c) && c != '_')
            return false;
    return true;
}

bool valid_numeric(const std::string& s) {
    size_t slash = s.find('/');
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit((unsigned char)c)) return false;
        return true;
    };
    if (slash == std::string::npos) return digits(s);
    return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

}  // namespace

CircleSet parse_circles(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty circle spec");
    std::map<int, std::vector<std::string>> by_color;
    for (const auto& group : split(text, ';')) {
        size_t colon = group.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("missing ':' in circle spec");
        std::string color_text = group.substr(0, colon);
        if (!valid_numeric(color_text) || color_text.find('/') != std::string::npos)
            throw std::invalid_argument("bad color in circle spec");
        int color = std::stoi(color_text);
        if (color < 1 || by_color.count(color))
            throw std::invalid_argument("colors must be distinct positive integers");
        for (const auto& len : split(group.substr(colon + 1), ',')) {
            if (!valid_symbol(len) && !valid_numeric(len))
                throw std::invalid_argument("bad length token: " + len);
            by_color[color].push_back(len);
        }
    }
    CircleSet c;
    int expect = 1;
    for (const auto& [color, lens] : by_color) {
        if (color != expect++) throw std::invalid_argument("colors must form 1..k");
        c.lengths.push_back(lens);
    }
    return c;
}

}  // namespace cacti
