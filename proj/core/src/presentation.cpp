#include "galcov/presentation.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace galcov {

std::string Presentation::word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += name(w[i]);
        if (w[i] < 0) out += "^-1";
    }
    return out;
}

Presentation make_presentation(int ngens) {
    Presentation p;
    for (int g = 1; g <= ngens; ++g) p.names.push_back("g" + std::to_string(g));
    return p;
}

Presentation add_square_relators(const Presentation& p) {
    Presentation out = p;
    for (int g = 1; g <= p.ngens(); ++g)
        out.add_relator(Word{g, g}, "square " + p.names[g - 1]);
    return out;
}

std::string dump_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "# generators " << p.ngens() << "\n";
    for (const auto& n : p.names) os << n << "\n";
    os << "# relators " << p.relators.size() << "\n";
    for (size_t i = 0; i < p.relators.size(); ++i) {
        if (i < p.provenance.size() && !p.provenance[i].empty())
            os << "# " << p.provenance[i] << "\n";
        os << p.word_string(p.relators[i]) << "\n";
    }
    return os.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    enum { Gens, Rels } mode = Gens;
    std::string pending_tag;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# relators", 0) == 0) {
                mode = Rels;
            } else if (mode == Rels && line.rfind("# generators", 0) != 0) {
                pending_tag = line.size() > 2 ? line.substr(2) : "";
            }
            continue;
        }
        if (mode == Gens) {
            p.names.push_back(line);
        } else {
            p.add_relator(parse_word(p, line), pending_tag);
            pending_tag.clear();
        }
    }
    return p;
}

Word parse_word(const Presentation& p, const std::string& text) {
    std::map<std::string, int> by_name;
    for (int g = 1; g <= p.ngens(); ++g) by_name[p.names[g - 1]] = g;
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        auto it = by_name.find(tok);
        if (it == by_name.end())
            throw std::invalid_argument("unknown generator: " + tok);
        w.push_back(sign * it->second);
    }
    return free_reduce(w);
}

}  // namespace galcov
