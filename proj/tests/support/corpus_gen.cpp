// Writes the pinned corpus fixture: all connected claw-free cubic
// graphs up to the requested order, one graph6 line each.
#include <fstream>
#include <iostream>

#include "corpus.hpp"

int main(int argc, char** argv) {
    int max_n = 14;
    std::string path = "clawfree_cubic_le14.g6";
    if (argc > 1) path = argv[1];
    if (argc > 2) max_n = std::atoi(argv[2]);
    auto lines = forcing::test::corpus_graph6_lines(max_n);
    std::ofstream out(path);
    for (const auto& l : lines) out << l << "\n";
    std::cout << "wrote " << lines.size() << " graphs to " << path << "\n";
    return 0;
}
