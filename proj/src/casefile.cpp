#include "hf/casefile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace hf {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    const std::string& origin;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(origin + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + msg);
    }
};

const std::string kKnownExpect[] = {"reg",  "reg1", "depth", "dim",
                                    "h0",   "B",    "r",     "postulation"};

bool known_expect_key(const std::string& k) {
    if (k.size() >= 2 && k[0] == 'e' &&
        std::all_of(k.begin() + 1, k.end(), [](char c) { return std::isdigit(c); }))
        return true;
    for (const std::string& s : kKnownExpect)
        if (s == k) return true;
    return false;
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

Monomial parse_tuple(Cursor& cur, const std::string& tok, int n) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        cur.fail("expected exponent tuple like [2,0], got '" + tok + "'");
    std::vector<int> e;
    std::string body = tok.substr(1, tok.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            if (v < 0) cur.fail("negative exponent in '" + tok + "'");
            e.push_back(static_cast<int>(v));
        } catch (const std::exception&) {
            cur.fail("bad exponent '" + item + "' in tuple '" + tok + "'");
        }
    }
    if (static_cast<int>(e.size()) != n)
        cur.fail("tuple '" + tok + "' has " + std::to_string(e.size()) +
                 " entries, ring has " + std::to_string(n) + " variables");
    return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(Cursor& cur, const std::vector<std::string>& toks,
                          std::size_t from, int n) {
    std::vector<Monomial> gens;
    for (std::size_t i = from; i < toks.size(); ++i)
        gens.push_back(parse_tuple(cur, toks[i], n));
    return minimalize(n, std::move(gens));
}

}  // namespace

CaseFile parse_case_text(std::string_view text, const std::string& origin) {
    CaseFile cf;
    int n = -1;
    std::vector<std::pair<int, MonomialIdeal>> chain;  // (k, N_k)
    bool have_q = false;
    std::optional<MonomialIdeal> j_ideal;

    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        std::string_view line = raw.substr(0, raw.find('#'));
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) {
            if (start > text.size()) break;
            continue;
        }
        Cursor cur{text, 0, line_no, 1, origin};
        const std::string& key = toks[0];
        auto number = [&cur](const std::string& tok) -> unsigned long long {
            bool digits = !tok.empty() &&
                          std::all_of(tok.begin(), tok.end(), [](char c) {
                              return std::isdigit(static_cast<unsigned char>(c));
                          });
            if (!digits) cur.fail("expected a number, got '" + tok + "'");
            try {
                return std::stoull(tok);
            } catch (const std::exception&) {
                cur.fail("number out of range: '" + tok + "'");
            }
        };

        if (key == "ring") {
            if (toks.size() != 2) cur.fail("ring takes one argument (variable count)");
            n = static_cast<int>(number(toks[1]));
            if (n < 1) cur.fail("variable count must be >= 1");
        } else if (key == "label") {
            if (toks.size() != 2) cur.fail("label takes one word");
            cf.label = toks[1];
        } else if (key == "primes") {
            if (toks.size() != 3) cur.fail("primes takes two values");
            cf.prime0 = static_cast<std::uint32_t>(number(toks[1]));
            cf.prime1 = static_cast<std::uint32_t>(number(toks[2]));
        } else if (key == "seed") {
            if (toks.size() != 2) cur.fail("seed takes one value");
            cf.seed = number(toks[1]);
        } else if (key == "Q") {
            if (n < 0) cur.fail("ring must come before Q");
            cf.spec.Q = parse_ideal(cur, toks, 1, n);
            have_q = true;
        } else if (key == "J") {
            if (n < 0) cur.fail("ring must come before J");
            j_ideal = parse_ideal(cur, toks, 1, n);
        } else if (key.size() >= 2 && key[0] == 'N' &&
                   std::all_of(key.begin() + 1, key.end(), [](char c) {
                       return std::isdigit(static_cast<unsigned char>(c));
                   })) {
            if (n < 0) cur.fail("ring must come before chain ideals");
            int k = std::stoi(key.substr(1));
            if (k < 1) cur.fail("chain indices start at N1");
            chain.emplace_back(k, parse_ideal(cur, toks, 1, n));
        } else if (key == "expect") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::size_t eq = toks[i].find('=');
                if (eq == std::string::npos)
                    cur.fail("expect entries look like reg=3");
                std::string k = toks[i].substr(0, eq);
                if (!known_expect_key(k)) cur.fail("unknown expect key '" + k + "'");
                try {
                    cf.expect[k] = std::stoll(toks[i].substr(eq + 1));
                } catch (const std::exception&) {
                    cur.fail("bad expect value in '" + toks[i] + "'");
                }
            }
        } else {
            cur.fail("unknown key '" + key + "'");
        }
        if (start > text.size()) break;
    }

    Cursor tail{text, 0, line_no, 1, origin};
    if (n < 0) tail.fail("missing ring line");
    if (!have_q) tail.fail("missing Q line");
    cf.spec.ring.n = n;
    cf.spec.J = j_ideal.value_or(MonomialIdeal::maximal(n));
    cf.spec.initial = {MonomialIdeal::unit(n)};
    std::sort(chain.begin(), chain.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].first != static_cast<int>(i) + 1)
            tail.fail("chain ideals must be consecutive starting at N1");
        cf.spec.initial.push_back(chain[i].second);
    }
    try {
        validate_filtration(cf.spec);
    } catch (const error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    return cf;
}

CaseFile parse_case_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_case_text(ss.str(), path);
}

std::string emit_case_text(const CaseFile& c) {
    std::string out;
    if (!c.label.empty()) out += "label " + c.label + "\n";
    out += "ring " + std::to_string(c.spec.ring.n) + "\n";
    if (c.prime0 && c.prime1)
        out += "primes " + std::to_string(*c.prime0) + " " +
               std::to_string(*c.prime1) + "\n";
    if (c.seed) out += "seed " + std::to_string(*c.seed) + "\n";

    auto ideal_line = [&](const std::string& key, const MonomialIdeal& q) {
        std::string s = key;
        for (const Monomial& g : q.gens()) {
            s += " [";
            for (std::size_t i = 0; i < g.e.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(g.e[i]);
            }
            s += "]";
        }
        out += s + "\n";
    };
    ideal_line("Q", c.spec.Q);
    ideal_line("J", c.spec.J);
    for (int k = 1; k <= c.spec.r(); ++k)
        ideal_line("N" + std::to_string(k),
                   c.spec.initial[static_cast<std::size_t>(k)]);
    if (!c.expect.empty()) {
        out += "expect";
        for (const auto& [k, v] : c.expect) out += " " + k + "=" + std::to_string(v);
        out += "\n";
    }
    return out;
}

}  // namespace hf
