#include "interlace/cli.hpp"
#include "interlace/errors.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace interlace {

void RunReport::add_text(const std::string& block) {
    text_.push_back(block.empty() || block.back() == '\n' ? block : block + "\n");
}

bool RunReport::check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    CheckRecord r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = fn();
        r.pass = pass;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.pass;
    checks_.push_back(std::move(r));
    return pass;
}

bool RunReport::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string RunReport::render(bool timing) const {
    std::ostringstream out;
    for (const auto& t : text_) out << t;
    int passed = 0;
    for (const auto& c : checks_) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.3fs)", c.seconds);
            out << buf;
        }
        out << "\n";
        passed += c.pass;
    }
    out << command_ << ": " << passed << " passed, " << checks_.size() - passed << " failed\n";
    return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ArgumentError("empty entry in integer list '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw ArgumentError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace interlace
