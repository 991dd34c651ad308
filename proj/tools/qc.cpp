#include <cstdio>

int main() {
    std::puts("qc: subcommands not wired up yet");
    return 1;
}
