// Placeholder entry point; subcommands are wired up with the harness.
#include <cstdio>

int main() {
    std::puts("dtpt: not yet wired");
    return 1;
}
