#include "altext/cochain_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace altext {

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(line, std::string("expected '") + c + "'");
    }

    bool at_end() {
        skip_ws();
        return pos == s.size();
    }

    Residue integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError(line, "expected an integer");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }

    // An element: "(c1,c2,...)", "()" for the trivial group, or a bare
    // residue when the group has a single factor.
    GroupElem element(const FinAbGroup& g) {
        skip_ws();
        std::vector<Residue> coords;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            skip_ws();
            if (!eat(')')) {
                coords.push_back(integer());
                while (eat(',')) coords.push_back(integer());
                expect(')');
            }
        } else {
            if (g.rank() != 1)
                throw ParseError(line, "expected '(' starting an element of " + g.to_string());
            coords.push_back(integer());
        }
        GroupElem e{std::move(coords)};
        if (!g.contains(e))
            throw ParseError(line, "element " + e.to_string() + " is not in " + g.to_string());
        return e;
    }
};

std::string render_elem(const GroupElem& e, bool drop_parens) {
    if (drop_parens && e.size() == 1) return std::to_string(e[0]);
    return e.to_string();
}

}  // namespace

Cochain parse_cochain(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;  // (1-based number, content)
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++number;
            std::size_t hash = raw.find('#');
            if (hash != std::string_view::npos) raw = raw.substr(0, hash);
            std::size_t a = raw.find_first_not_of(" \t\r");
            if (a != std::string_view::npos) {
                std::size_t b = raw.find_last_not_of(" \t\r");
                lines.emplace_back(number, std::string(raw.substr(a, b - a + 1)));
            }
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    auto header = [&](std::size_t i, const std::string& key) -> std::pair<int, std::string> {
        if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().first, "missing '" + key + " = ...' header");
        const auto& [number, content] = lines[i];
        std::size_t eq = content.find('=');
        if (eq == std::string::npos) throw ParseError(number, "expected '" + key + " = ...'");
        std::string lhs = content.substr(0, eq);
        while (!lhs.empty() && (lhs.back() == ' ' || lhs.back() == '\t')) lhs.pop_back();
        if (lhs != key) throw ParseError(number, "expected header key '" + key + "', found '" + lhs + "'");
        std::string rhs = content.substr(eq + 1);
        return {number, rhs};
    };

    FinAbGroup B = FinAbGroup::trivial(), A = FinAbGroup::trivial();
    int arity = 0;
    try {
        B = FinAbGroup::parse(header(0, "B").second);
    } catch (const std::invalid_argument& e) {
        throw ParseError(header(0, "B").first, e.what());
    }
    try {
        A = FinAbGroup::parse(header(1, "A").second);
    } catch (const std::invalid_argument& e) {
        throw ParseError(header(1, "A").first, e.what());
    }
    {
        auto [number, rhs] = header(2, "arity");
        Scanner sc{rhs, 0, number};
        arity = static_cast<int>(sc.integer());
        if (!sc.at_end()) throw ParseError(number, "trailing characters after arity");
        if (arity < 1) throw ParseError(number, "arity must be >= 1");
    }

    Cochain c(B, A, arity);
    std::vector<bool> filled(static_cast<std::size_t>(c.tuple_count()), false);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto& [number, content] = lines[i];
        Scanner sc{content, 0, number};
        std::vector<GroupElem> args;
        sc.expect('(');
        // Distinguish "((..),(..))" from the single-factor short form "(1,1,1)".
        sc.skip_ws();
        if (sc.pos < sc.s.size() && sc.s[sc.pos] == '(') {
            args.push_back(sc.element(B));
            while (sc.eat(',')) args.push_back(sc.element(B));
            sc.expect(')');
        } else {
            if (B.rank() != 1) throw ParseError(number, "expected '(' starting an element of " + B.to_string());
            std::vector<Residue> flat_coords;
            flat_coords.push_back(sc.integer());
            while (sc.eat(',')) flat_coords.push_back(sc.integer());
            sc.expect(')');
            for (Residue r : flat_coords) {
                GroupElem e{{r}};
                if (!B.contains(e))
                    throw ParseError(number, "element " + e.to_string() + " is not in " + B.to_string());
                args.push_back(std::move(e));
            }
        }
        sc.expect(':');
        GroupElem value = sc.element(A);
        if (!sc.at_end()) throw ParseError(number, "trailing characters after entry");

        if (args.size() != static_cast<std::size_t>(arity))
            throw ParseError(number, "entry has " + std::to_string(args.size()) + " arguments, arity is " +
                                         std::to_string(arity));
        std::int64_t flat = 0;
        for (const auto& a : args) flat = flat * B.order() + B.index_of(a);
        if (filled[static_cast<std::size_t>(flat)]) {
            std::string tuple;
            for (const auto& a : args) tuple += a.to_string();
            throw ParseError(number, "duplicate tuple " + tuple);
        }
        filled[static_cast<std::size_t>(flat)] = true;
        try {
            c.set_value_flat(flat, value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(number, e.what());
        }
    }
    return c;
}

std::string serialize_cochain(const Cochain& c) {
    std::ostringstream os;
    os << "B = " << c.base().to_string() << '\n';
    os << "A = " << c.coeff().to_string() << '\n';
    os << "arity = " << c.arity() << '\n';

    const bool short_b = c.base().rank() == 1;
    const bool short_a = c.coeff().rank() == 1;
    const std::int64_t order = c.base().order();
    std::vector<std::int64_t> digits(c.arity());
    for (std::int64_t flat = 0; flat < c.tuple_count(); ++flat) {
        GroupElem v = c.value_flat(flat);
        if (v.is_zero()) continue;
        std::int64_t rem = flat;
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = rem % order;
            rem /= order;
        }
        os << '(';
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) os << ',';
            os << render_elem(c.base().element_at(digits[i]), short_b);
        }
        os << ") : " << render_elem(v, short_a) << '\n';
    }
    return os.str();
}

Cochain load_cochain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cochain(buf.str());
}

void save_cochain(const Cochain& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_cochain(c);
}

}  // namespace altext
