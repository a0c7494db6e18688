#include <pfv/corpus.hpp>

namespace pfv {

std::vector<std::string> corpus_poly_names() {
    std::vector<std::string> names = {"g2", "g3", "g4", "g5", "Wbar2", "Wbar3",
                                      "Wbar4", "Wbar5", "rel1", "rel2", "rel3",
                                      "p", "q"};
    for (int r = 0; r <= 8; ++r) names.push_back("f" + std::to_string(r));
    return names;
}

} // namespace pfv
