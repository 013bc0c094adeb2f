// Regenerates fixtures/proofs/*.json from the built-in derivations and a few
// sample documents under fixtures/examples/. The unit tests fail when the
// proof files drift from the builders.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nabla/json_io.hpp"

namespace {

void write(const std::filesystem::path& path, const nabla::Json& j) {
  std::ofstream(path) << j.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(root / "proofs");
  std::filesystem::create_directories(root / "examples");
  for (const auto& f : nabla::standard_fixtures())
    write(root / "proofs" / (f.name + ".json"), nabla::fixture_to_json(f));

  using namespace nabla;
  auto chain3 = validate_poset({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}).value();
  auto l3 = lattice_from_poset(chain3).value();

  std::vector<int> id{0, 1, 2};
  NablaAlgebra heyting{l3, id, try_residual_from_nabla(l3, id).value(), true};
  write(root / "examples" / "heyting_three_chain.json",
        algebra_to_json(heyting, {"0", "a", "1"}));

  std::vector<int> bot{0, 0, 0};
  NablaAlgebra left{l3, bot, try_residual_from_nabla(l3, bot).value(), false};
  write(root / "examples" / "left_three_chain.json",
        algebra_to_json(left, {"0", "a", "1"}));

  auto chain2 = validate_poset({{1, 1}, {0, 1}}).value();
  auto order_frame = validate_frame_masks(chain2, chain2.up).value();
  write(root / "examples" / "two_chain_order_frame.json",
        frame_to_json(order_frame));
  auto empty_frame =
      validate_frame_masks(chain2, std::vector<Mask>(2, 0)).value();
  write(root / "examples" / "two_chain_empty_frame.json",
        frame_to_json(empty_frame));

  write(root / "examples" / "z12.json", ring_to_json(zmod(12)));
  write(root / "examples" / "sierpinski_space.json",
        space_to_json(to_spectral(chain2)));
  return 0;
}
