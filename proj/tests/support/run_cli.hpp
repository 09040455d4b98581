#ifndef ENT_TESTS_RUN_CLI_HPP
#define ENT_TESTS_RUN_CLI_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
};

inline Result run(const std::string& command) {
    Result result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + command);
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace cli

#endif
