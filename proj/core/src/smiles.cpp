#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "asmbly/errors.hpp"
#include "asmbly/molgraph.hpp"

namespace asmbly {

namespace {

bool organic_symbol(const std::string& s) {
    static const char* table[] = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"};
    for (const char* t : table)
        if (s == t) return true;
    return false;
}

}  // namespace

LabeledGraph parse_smiles(const std::string& smiles) {
    LabeledGraph g;
    std::vector<std::uint32_t> stack;          // open branch anchors
    std::optional<std::uint32_t> prev;         // atom awaiting the next bond
    std::optional<Bond> pending;               // explicit bond symbol seen
    struct RingOpen {
        std::uint32_t atom;
        std::optional<Bond> bond;
    };
    std::map<int, RingOpen> rings;

    auto connect = [&](std::uint32_t to, std::optional<Bond> open_bond, std::size_t pos) {
        Bond order = Bond::Single;
        if (pending && open_bond && *pending != *open_bond)
            throw ParseError("conflicting bond orders at position " + std::to_string(pos));
        if (pending) order = *pending;
        else if (open_bond) order = *open_bond;
        pending.reset();
        if (!prev) throw ParseError("bond with no preceding atom at position " + std::to_string(pos));
        try {
            g.add_edge(*prev, to, order);
        } catch (const InvalidInputError& e) {
            throw ParseError(std::string(e.what()) + " at position " + std::to_string(pos));
        }
    };

    std::size_t i = 0;
    while (i < smiles.size()) {
        char c = smiles[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            if (!prev) throw ParseError("branch with no preceding atom at position " + std::to_string(i));
            stack.push_back(*prev);
            ++i;
            continue;
        }
        if (c == ')') {
            if (stack.empty()) throw ParseError("unmatched ')' at position " + std::to_string(i));
            if (pending) throw ParseError("dangling bond before ')' at position " + std::to_string(i));
            prev = stack.back();
            stack.pop_back();
            ++i;
            continue;
        }
        if (c == '-' || c == '=' || c == '#') {
            if (pending) throw ParseError("doubled bond symbol at position " + std::to_string(i));
            pending = (c == '-') ? Bond::Single : (c == '=') ? Bond::Double : Bond::Triple;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
            int num;
            if (c == '%') {
                if (i + 2 >= smiles.size() || !std::isdigit(static_cast<unsigned char>(smiles[i + 1])) ||
                    !std::isdigit(static_cast<unsigned char>(smiles[i + 2])))
                    throw ParseError("malformed %nn ring label at position " + std::to_string(i));
                num = (smiles[i + 1] - '0') * 10 + (smiles[i + 2] - '0');
                i += 3;
            } else {
                num = c - '0';
                ++i;
            }
            if (!prev)
                throw ParseError("ring label with no preceding atom at position " + std::to_string(i));
            auto it = rings.find(num);
            if (it == rings.end()) {
                rings[num] = RingOpen{*prev, pending};
                pending.reset();
            } else {
                RingOpen open = it->second;
                rings.erase(it);
                if (open.atom == *prev)
                    throw ParseError("ring bond closes on its own atom at position " + std::to_string(i));
                std::uint32_t from = *prev;
                Bond order = Bond::Single;
                if (pending && open.bond && *pending != *open.bond)
                    throw ParseError("conflicting ring bond orders at position " + std::to_string(i));
                if (pending) order = *pending;
                else if (open.bond) order = *open.bond;
                pending.reset();
                try {
                    g.add_edge(from, open.atom, order);
                } catch (const InvalidInputError& e) {
                    throw ParseError(std::string(e.what()) + " at position " + std::to_string(i));
                }
            }
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string sym(1, c);
            if (i + 1 < smiles.size() && std::islower(static_cast<unsigned char>(smiles[i + 1]))) {
                std::string two = sym + smiles[i + 1];
                if (organic_symbol(two)) {
                    sym = two;
                    ++i;
                }
            }
            if (!organic_symbol(sym))
                throw ParseError("unsupported atom '" + sym + "' at position " + std::to_string(i));
            std::uint32_t id = g.add_vertex(sym);
            if (prev) connect(id, std::nullopt, i);
            else if (pending)
                throw ParseError("leading bond symbol at position " + std::to_string(i));
            prev = id;
            ++i;
            continue;
        }
        throw ParseError(std::string("unsupported token '") + c + "' at position " + std::to_string(i));
    }
    if (!stack.empty()) throw ParseError("unmatched '(' in SMILES");
    if (!rings.empty())
        throw ParseError("unmatched ring label " + std::to_string(rings.begin()->first));
    if (pending) throw ParseError("trailing bond symbol in SMILES");
    if (g.vertex_count() == 0) throw ParseError("empty SMILES");
    return g;
}

}  // namespace asmbly
