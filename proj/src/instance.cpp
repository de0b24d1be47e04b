#include "steiner/instance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace steiner {

namespace {

// Fenwick tree counting inserted right-endpoint ranks.
struct fenwick {
    std::vector<int> tree;
    explicit fenwick(int n) : tree(static_cast<std::size_t>(n) + 1, 0) {}
    void add(int pos) {
        for (int i = pos + 1; i < static_cast<int>(tree.size()); i += i & -i) ++tree[static_cast<std::size_t>(i)];
    }
    int prefix(int pos) const {  // count of inserted ranks <= pos
        int s = 0;
        for (int i = pos + 1; i > 0; i -= i & -i) s += tree[static_cast<std::size_t>(i)];
        return s;
    }
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

instance instance::build(std::vector<interval> raw, const std::vector<std::string>& terminal_ids) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const interval& a, const interval& b) { return a.r < b.r; });
    instance inst;
    inst.items = std::move(raw);
    inst.is_terminal.assign(inst.items.size(), 0);
    for (int i = 0; i < inst.n(); ++i) {
        const interval& iv = inst.items[static_cast<std::size_t>(i)];
        if (iv.l > iv.r) throw parse_error(0, "interval " + iv.id + " has l > r");
        if (!inst.index_of.emplace(iv.id, i).second) throw parse_error(0, "duplicate id " + iv.id);
    }
    if (terminal_ids.empty()) throw parse_error(0, "empty terminal set");
    for (const std::string& id : terminal_ids) {
        auto it = inst.index_of.find(id);
        if (it == inst.index_of.end()) throw parse_error(0, "unknown terminal " + id);
        if (!inst.is_terminal[static_cast<std::size_t>(it->second)]) {
            inst.is_terminal[static_cast<std::size_t>(it->second)] = 1;
            ++inst.terminal_count;
        }
    }
    return inst;
}

instance instance::parse(std::istream& in) {
    instance inst;
    std::string line;
    int line_no = 0;
    int declared = -1;
    int seen = 0;
    bool have_terminals = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (declared < 0) {
            if (tok.size() != 2 || tok[0] != "intervals")
                throw parse_error(line_no, "expected 'intervals <n>'");
            try {
                declared = std::stoi(tok[1]);
            } catch (...) {
                throw parse_error(line_no, "invalid interval count '" + tok[1] + "'");
            }
            if (declared < 0) throw parse_error(line_no, "invalid interval count '" + tok[1] + "'");
            continue;
        }
        if (seen < declared) {
            if (tok[0] == "terminals")
                throw parse_error(line_no, "expected " + std::to_string(declared) +
                                               " interval lines, got " + std::to_string(seen));
            if (tok.size() != 3) throw parse_error(line_no, "expected '<id> <l> <r>'");
            auto l = rational::parse(tok[1]);
            if (!l) throw parse_error(line_no, "invalid endpoint '" + tok[1] + "'");
            auto r = rational::parse(tok[2]);
            if (!r) throw parse_error(line_no, "invalid endpoint '" + tok[2] + "'");
            if (*l > *r) throw parse_error(line_no, "interval " + tok[0] + " has l > r");
            if (inst.index_of.count(tok[0])) throw parse_error(line_no, "duplicate id " + tok[0]);
            if (seen > 0 && inst.items.back().r > *r)
                throw parse_error(line_no, "right endpoints not nondecreasing at " + tok[0]);
            inst.index_of.emplace(tok[0], seen);
            inst.items.push_back(interval{tok[0], *l, *r});
            ++seen;
            continue;
        }
        if (!have_terminals) {
            if (tok[0] != "terminals") throw parse_error(line_no, "expected 'terminals <id...>'");
            if (tok.size() < 2) throw parse_error(line_no, "empty terminal set");
            inst.is_terminal.assign(inst.items.size(), 0);
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto it = inst.index_of.find(tok[i]);
                if (it == inst.index_of.end())
                    throw parse_error(line_no, "unknown terminal " + tok[i]);
                if (!inst.is_terminal[static_cast<std::size_t>(it->second)]) {
                    inst.is_terminal[static_cast<std::size_t>(it->second)] = 1;
                    ++inst.terminal_count;
                }
            }
            have_terminals = true;
            continue;
        }
        throw parse_error(line_no, "unexpected content after terminals");
    }
    if (declared < 0) throw parse_error(line_no + 1, "expected 'intervals <n>'");
    if (seen < declared)
        throw parse_error(line_no + 1, "expected " + std::to_string(declared) +
                                           " interval lines, got " + std::to_string(seen));
    if (!have_terminals) throw parse_error(line_no + 1, "expected 'terminals <id...>'");
    return inst;
}

void instance::serialize(std::ostream& out) const {
    out << "intervals " << n() << "\n";
    for (const interval& iv : items) out << iv.id << " " << iv.l.to_string() << " " << iv.r.to_string() << "\n";
    out << "terminals";
    for (int i = 0; i < n(); ++i)
        if (is_terminal[static_cast<std::size_t>(i)]) out << " " << items[static_cast<std::size_t>(i)].id;
    out << "\n";
}

std::vector<std::vector<int>> components_after_removal(const instance& inst,
                                                       const std::vector<int>& removed) {
    std::vector<char> gone(static_cast<std::size_t>(inst.n()), 0);
    for (int idx : removed) gone[static_cast<std::size_t>(idx)] = 1;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i)
        if (!gone[static_cast<std::size_t>(i)]) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const interval& ia = inst.items[static_cast<std::size_t>(a)];
        const interval& ib = inst.items[static_cast<std::size_t>(b)];
        int c = cmp(ia.l, ib.l);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<std::vector<int>> groups;
    rational max_r;
    for (int idx : order) {
        const interval& iv = inst.items[static_cast<std::size_t>(idx)];
        if (groups.empty() || iv.l > max_r) {
            groups.emplace_back();
            max_r = iv.r;
        } else if (iv.r > max_r) {
            max_r = iv.r;
        }
        groups.back().push_back(idx);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return groups;
}

int kappa(const instance& inst) {
    if (inst.n() == 0) return 0;
    // Rank right endpoints; items are already sorted by r.
    std::vector<int> rank(static_cast<std::size_t>(inst.n()), 0);
    int distinct = 0;
    for (int i = 1; i < inst.n(); ++i) {
        if (inst.items[static_cast<std::size_t>(i)].r != inst.items[static_cast<std::size_t>(i - 1)].r) ++distinct;
        rank[static_cast<std::size_t>(i)] = distinct;
    }
    std::vector<int> by_l_desc(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i) by_l_desc[static_cast<std::size_t>(i)] = i;
    std::sort(by_l_desc.begin(), by_l_desc.end(), [&](int a, int b) {
        int c = cmp(inst.items[static_cast<std::size_t>(a)].l, inst.items[static_cast<std::size_t>(b)].l);
        if (c != 0) return c > 0;
        return a < b;
    });
    // Sweep l descending; insert whole equal-l batches before querying them
    // so twins count each other.
    fenwick fw(distinct + 1);
    int best = 0;
    std::size_t i = 0;
    while (i < by_l_desc.size()) {
        std::size_t j = i;
        while (j < by_l_desc.size() &&
               inst.items[static_cast<std::size_t>(by_l_desc[j])].l ==
                   inst.items[static_cast<std::size_t>(by_l_desc[i])].l)
            ++j;
        for (std::size_t k = i; k < j; ++k) fw.add(rank[static_cast<std::size_t>(by_l_desc[k])]);
        for (std::size_t k = i; k < j; ++k) {
            int inside = fw.prefix(rank[static_cast<std::size_t>(by_l_desc[k])]) - 1;
            if (inside > best) best = inside;
        }
        i = j;
    }
    return best;
}

}  // namespace steiner
