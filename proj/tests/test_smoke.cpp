#include <catch2/catch_amalgamated.hpp>
#include "wqt/star/algebra.hpp"
#include "wqt/star/projectors.hpp"
#include "wqt/star/ladder.hpp"
#include "wqt/star/gns.hpp"
#include "wqt/star/composite.hpp"
#include "wqt/star/canonical_pair.hpp"
#include "wqt/weak/observable.hpp"
#include "wqt/weak/proposition.hpp"
#include "wqt/weak/system.hpp"
#include "wqt/weak/composite.hpp"
#include "wqt/weak/enumerate.hpp"
#include "wqt/lattice/lattice.hpp"
#include "wqt/lattice/from_propositions.hpp"
#include "wqt/lattice/search.hpp"
#include "wqt/lattice/projector_family.hpp"
#include "wqt/infodyn/grid.hpp"
#include "wqt/infodyn/maps.hpp"
#include "wqt/infodyn/entropy.hpp"
#include "wqt/infodyn/bandwidth.hpp"
#include "wqt/infodyn/prediction.hpp"

TEST_CASE("headers compile") { REQUIRE(true); }
