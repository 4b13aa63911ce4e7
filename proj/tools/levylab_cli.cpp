// Placeholder CLI entry point; subcommands are wired up in experiments.hpp.
#include <cstdio>

int main() {
    std::puts("levylab: CLI under construction");
    return 0;
}
