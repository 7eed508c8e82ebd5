#include "reflecta/presentation.hpp"

#include <cctype>
#include <regex>

namespace reflecta {

namespace {

int to_int(const std::string& s, const std::string& text) {
    if (s.empty() || s.size() > 6) throw ParseError("malformed group symbol: " + text);
    return std::stoi(s);
}

std::vector<int> alternating(int a, int b, int len) {
    std::vector<int> w;
    for (int k = 0; k < len; ++k) w.push_back(k % 2 == 0 ? a : b);
    return w;
}

}  // namespace

bool GroupPresentation::is_real() const {
    for (int p : orders)
        if (p != 2) return false;
    return true;
}

bool GroupPresentation::is_linear() const {
    for (int i = 0; i < rank; ++i)
        for (int j = i + 2; j < rank; ++j)
            if (braid[i][j] != 2) return false;
    return true;
}

void GroupPresentation::validate() const {
    if (rank <= 0) throw ParseError("presentation must have positive rank");
    if (static_cast<int>(orders.size()) != rank || static_cast<int>(braid.size()) != rank)
        throw ParseError("presentation table sizes disagree with rank");
    for (int i = 0; i < rank; ++i) {
        if (orders[i] < 2) throw ParseError("generator orders must be at least 2");
        if (static_cast<int>(braid[i].size()) != rank) throw ParseError("braid table is not square");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (braid[i][j] < 2) throw ParseError("braid lengths must be at least 2");
            if (braid[i][j] != braid[j][i]) throw ParseError("braid table is not symmetric");
        }
    }
}

std::vector<std::vector<int>> relators(const GroupPresentation& p) {
    std::vector<std::vector<int>> rels;
    for (int i = 0; i < p.rank; ++i) rels.emplace_back(static_cast<std::size_t>(p.orders[i]), 2 * i);
    for (int i = 0; i < p.rank; ++i)
        for (int j = i + 1; j < p.rank; ++j) {
            int q = p.braid[i][j];
            // (r_i r_j r_i ...)_q (r_j r_i r_j ...)_q^{-1}
            std::vector<int> w = alternating(2 * i, 2 * j, q);
            std::vector<int> v = alternating(2 * j, 2 * i, q);
            for (auto it = v.rbegin(); it != v.rend(); ++it) w.push_back(*it + 1);
            rels.push_back(std::move(w));
        }
    return rels;
}

GroupPresentation linear_presentation(const std::vector<int>& orders, const std::vector<int>& links,
                                      const std::string& label) {
    GroupPresentation p;
    p.rank = static_cast<int>(orders.size());
    p.orders = orders;
    p.label = label;
    p.braid.assign(orders.size(), std::vector<int>(orders.size(), 2));
    for (std::size_t i = 0; i < orders.size(); ++i) p.braid[i][i] = 0;
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
        p.braid[i][i + 1] = links.at(i);
        p.braid[i + 1][i] = links.at(i);
    }
    p.validate();
    return p;
}

GroupPresentation parse_symbol(const std::string& text) {
    static const std::regex re_typed(R"(([ABD])([0-9]+))");
    static const std::regex re_dihedral(R"(I2\(([0-9]+)\))");
    static const std::regex re_imprimitive(R"(G\(([0-9]+),1,([0-9]+)\))");
    static const std::regex re_exceptional(R"(G([0-9]+))");
    static const std::regex re_generic(R"([0-9]+(\[[0-9]+\][0-9]+)*)");
    std::smatch m;

    if (std::regex_match(text, m, re_typed)) {
        int n = to_int(m[2], text);
        char kind = m.str(1)[0];
        if (kind == 'A') {
            if (n < 1) throw ParseError("A<n> needs n >= 1");
            return linear_presentation(std::vector<int>(n, 2), std::vector<int>(n - 1, 3), text);
        }
        if (kind == 'B') {
            if (n < 2) throw ParseError("B<n> needs n >= 2");
            std::vector<int> links(n - 1, 3);
            links[0] = 4;
            return linear_presentation(std::vector<int>(n, 2), links, text);
        }
        if (n < 4) throw ParseError("D<n> needs n >= 4");
        // chain r_0 - ... - r_{n-2} with r_{n-1} attached to r_{n-3}
        GroupPresentation p = linear_presentation(std::vector<int>(n, 2), std::vector<int>(n - 1, 3), text);
        p.braid[n - 2][n - 1] = p.braid[n - 1][n - 2] = 2;
        p.braid[n - 3][n - 1] = p.braid[n - 1][n - 3] = 3;
        p.validate();
        return p;
    }
    if (text == "F4") return linear_presentation({2, 2, 2, 2}, {3, 4, 3}, text);
    if (text == "H3") return linear_presentation({2, 2, 2}, {5, 3}, text);
    if (text == "H4") return linear_presentation({2, 2, 2, 2}, {5, 3, 3}, text);
    if (std::regex_match(text, m, re_dihedral)) {
        int k = to_int(m[1], text);
        if (k < 2) throw ParseError("I2(m) needs m >= 2");
        return linear_presentation({2, 2}, {k}, text);
    }
    if (std::regex_match(text, m, re_imprimitive)) {
        int r = to_int(m[1], text), n = to_int(m[2], text);
        if (r < 2 || n < 1) throw ParseError("G(r,1,n) needs r >= 2 and n >= 1");
        std::vector<int> orders(n, 2);
        orders[0] = r;
        std::vector<int> links(n > 1 ? n - 1 : 0, 3);
        if (n > 1) links[0] = 4;
        return linear_presentation(orders, links, text);
    }
    if (std::regex_match(text, m, re_exceptional)) {
        int k = to_int(m[1], text);
        switch (k) {
            case 4: return linear_presentation({3, 3}, {3}, text);
            case 5: return linear_presentation({3, 3}, {4}, text);
            case 6: return linear_presentation({2, 3}, {6}, text);
            case 8: return linear_presentation({4, 4}, {3}, text);
            case 25: return linear_presentation({3, 3, 3}, {3, 3}, text);
            case 26: return linear_presentation({2, 3, 3}, {4, 3}, text);
            default: throw ParseError("unsupported group: " + text);
        }
    }
    if (std::regex_match(text, re_generic)) {
        std::vector<int> orders, links;
        std::size_t pos = 0;
        auto read_num = [&]() {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return to_int(text.substr(start, pos - start), text);
        };
        orders.push_back(read_num());
        while (pos < text.size()) {
            ++pos;  // '['
            links.push_back(read_num());
            ++pos;  // ']'
            orders.push_back(read_num());
        }
        return linear_presentation(orders, links, text);
    }
    throw ParseError("malformed or unsupported group symbol: " + text);
}

}  // namespace reflecta
