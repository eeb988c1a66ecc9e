#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace proc {

struct Output {
    int status = -1;
    std::string out;
};

// Runs a shell command, capturing stdout. stderr is discarded.
inline Output run(const std::string& command) {
    Output o;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return o;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

inline std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

inline std::string plan(const std::string& args) { return quote(CLIC_PLAN_EXE) + " " + args; }

} // namespace proc
