#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace interlace {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string detail;  // witness or counterexample
    double seconds = 0;
};

// Output of one CLI run: free text blocks followed by one line per check.
class RunReport {
public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    void add_text(const std::string& block);
    // Times fn; an exception counts as a failure carrying its message.
    bool check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn);
    void record(CheckRecord r) { checks_.push_back(std::move(r)); }

    const std::string& command() const { return command_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    bool all_pass() const;
    // Wall times are printed only with `timing`, keeping the default output reproducible.
    std::string render(bool timing) const;

private:
    std::string command_;
    std::vector<std::string> text_;
    std::vector<CheckRecord> checks_;
};

// Parses comma-separated integers such as "3,2,1"; an empty string gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

// Text rendered by replay-examples, one entry per golden file name.
std::vector<std::pair<std::string, std::string>> replay_outputs();

// Exit status 0 when every check passes, 1 when one fails, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace interlace
