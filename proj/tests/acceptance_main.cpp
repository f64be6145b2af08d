#include <cstdio>

#include "memoria/acceptance.hpp"

int main() {
    auto reports = memoria::run_acceptance();
    std::fputs(memoria::render_report(reports, true).c_str(), stdout);
    for (const auto& rep : reports)
        if (!rep.pass) return 1;
    return 0;
}
