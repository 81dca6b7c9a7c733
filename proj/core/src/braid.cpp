#include "galcov/braid.hpp"

#include <fstream>
#include <sstream>

namespace galcov {

int strand_index(const std::string& label) {
    if (label.empty()) throw BadFactorization("empty strand label");
    bool primed = label.back() == '\'';
    std::string num = primed ? label.substr(0, label.size() - 1) : label;
    size_t pos = 0;
    int j;
    try {
        j = std::stoi(num, &pos);
    } catch (const std::exception&) {
        throw BadFactorization("bad strand label '" + label + "'");
    }
    if (pos != num.size() || j < 1)
        throw BadFactorization("bad strand label '" + label + "'");
    return 2 * j + (primed ? 0 : -1);
}

std::vector<HalfTwistFactor> expand(const HalfTwistFactor& f) {
    if (!f.compound()) return {f};
    size_t comma = f.b.find(',');
    std::string j = f.b.substr(0, comma);
    std::string jp = f.b.substr(comma + 1);
    if (f.a.find(',') != std::string::npos)
        throw UnknownCompound("compound support only recognized in the second slot: Z on (" +
                              f.a + ", " + f.b + ")");
    if (f.exponent == 2) {
        HalfTwistFactor x = f, y = f;
        x.b = j;
        y.b = jp;
        return {x, y};
    }
    if (f.exponent == 3) {
        HalfTwistFactor base = f;
        base.b = j;
        HalfTwistFactor zjj;
        zjj.exponent = 1;
        zjj.a = j;
        zjj.b = jp;
        HalfTwistFactor c1 = base, c2 = base;
        c1.conjugators.push_back(zjj);
        zjj.sign = -1;
        c2.conjugators.push_back(zjj);
        return {base, c1, c2};
    }
    throw UnknownCompound("no expansion rule for exponent " +
                          std::to_string(f.exponent) + " on compound support (" + f.a +
                          ", " + f.b + ")");
}

namespace {

long expanded_exponent(const HalfTwistFactor& f) {
    long s = 0;
    for (const auto& g : expand(f))
        s += f.compound() ? expanded_exponent(g) : g.exponent;
    return s;
}

Permutation factor_permutation(const HalfTwistFactor& f, int strands) {
    if (f.compound()) {
        Permutation acc(strands);
        for (const auto& g : expand(f)) acc = acc.then(factor_permutation(g, strands));
        return acc;
    }
    int ia = strand_index(f.a), ib = strand_index(f.b);
    if (ia > strands || ib > strands)
        throw BadFactorization("strand label outside the declared " +
                               std::to_string(strands) + " strands");
    Permutation t = f.exponent % 2 != 0 ? Permutation::transposition(ia, ib, strands)
                                        : Permutation(strands);
    for (const auto& c : f.conjugators) {
        Permutation cp = factor_permutation(c, strands);
        t = cp.inverse().then(t).then(cp);
    }
    return t;
}

}  // namespace

long exponent_sum(const Factorization& F) {
    long s = 0;
    for (const auto& f : F.factors) s += expanded_exponent(f);
    return s;
}

Permutation induced_permutation(const Factorization& F) {
    Permutation acc(F.strands);
    for (const auto& f : F.factors) acc = acc.then(factor_permutation(f, F.strands));
    return acc;
}

namespace {

HalfTwistFactor parse_factor(const std::string& part, bool conjugator) {
    std::istringstream is(part);
    std::string head;
    HalfTwistFactor f;
    if (!(is >> head >> f.a >> f.b) || head.empty() || head[0] != 'Z')
        throw BadFactorization("expected 'Z<exp> <a> <b>', got '" + part + "'");
    std::string expstr = head.substr(1);
    int exp = 1;
    if (!expstr.empty()) {
        try {
            size_t pos = 0;
            exp = std::stoi(expstr, &pos);
            if (pos != expstr.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw BadFactorization("bad exponent in '" + head + "'");
        }
    }
    if (exp < 0) {
        if (!conjugator)
            throw BadFactorization("negative exponent only allowed on conjugators: '" +
                                   part + "'");
        f.sign = -1;
        exp = -exp;
    }
    if (exp < 1) throw BadFactorization("exponent must be >= 1 in '" + part + "'");
    f.exponent = exp;
    std::string extra;
    if (is >> extra)
        throw BadFactorization("unexpected token '" + extra + "' in '" + part + "'");
    if (f.a == f.b) throw BadFactorization("support labels must differ in '" + part + "'");
    return f;
}

}  // namespace

Factorization parse_factorization(const std::string& text, int strands) {
    if (strands < 2) throw BadFactorization("strand count must be at least 2");
    Factorization F;
    F.strands = strands;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> parts;
        size_t start = 0;
        while (true) {
            size_t caret = line.find('^', start);
            parts.push_back(line.substr(start, caret - start));
            if (caret == std::string::npos) break;
            start = caret + 1;
        }
        HalfTwistFactor f = parse_factor(parts[0], false);
        for (size_t i = 1; i < parts.size(); ++i)
            f.conjugators.push_back(parse_factor(parts[i], true));
        // fail fast on out-of-range labels and unknown compounds
        factor_permutation(f, strands);
        F.factors.push_back(std::move(f));
    }
    return F;
}

Factorization load_factorization(const std::string& path, int strands) {
    std::ifstream in(path);
    if (!in) throw BadFactorization("cannot open factorization file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_factorization(buf.str(), strands);
}

}  // namespace galcov
