import importlib.resources

from capclass import fixtures
from capclass.catalog import parse_fixtures
from capclass.geometry import is_cap, mask_from_points, space, spans

SP5 = space(5)


def test_all_reference_caps_are_spanning_caps():
    for name in list(fixtures.SEVEN_CAPS) + list(fixtures.EXTENSIONS):
        mask = fixtures.resolve_mask(name)
        assert is_cap(SP5, mask), name
        assert spans(SP5, mask), name
        size = int(name[1:].split("_")[0])
        assert mask.bit_count() == size, name


def test_every_expected_name_resolves():
    for name in fixtures.EXPECTED:
        assert name in fixtures.SEVEN_CAPS or name in fixtures.EXTENSIONS


def test_extension_parents_exist():
    known = set(fixtures.SEVEN_CAPS)
    for name, (parent, coords) in fixtures.EXTENSIONS.items():
        assert parent in known or parent in fixtures.EXTENSIONS, name
        assert len(coords) == 6 and any(coords), name


def test_seed_caps():
    assert fixtures.resolve_mask("c7_1") == mask_from_points(
        [1, 2, 4, 8, 16, 32, 63])
    assert fixtures.EXPECTED["c7_1"] == (5040, False)
    assert fixtures.stabilizer_multiset(7) == [144, 240, 720, 5040]
    assert fixtures.stabilizer_multiset(8) == [48, 72, 96, 144, 144, 192, 1152]


def test_fixture_file_round_trip():
    text = fixtures.fixture_file_text()
    parsed = parse_fixtures(SP5, text)
    assert len(parsed) == len(fixtures.EXPECTED)
    by_name = {f.name: f for f in parsed}
    for name, (stab, complete) in fixtures.EXPECTED.items():
        assert by_name[name].expected_stab == stab
        assert by_name[name].expected_complete == complete
        assert by_name[name].points == fixtures.resolve_mask(name)


def test_shipped_data_file_is_current():
    shipped = (importlib.resources.files("capclass") / "data" /
               "reference_caps_d5.txt").read_text()
    assert shipped == fixtures.fixture_file_text()


def test_reconstructed_complete_caps():
    from capclass.geometry import candidate_set, is_complete
    assert is_complete(SP5, fixtures.resolve_mask("c13_1"))
    assert candidate_set(SP5, fixtures.resolve_mask("c32_1")) == 0
    assert not is_complete(SP5, fixtures.resolve_mask("c31_1"))


def test_suspect_entries_present_as_printed():
    assert fixtures.EXPECTED["c11_9"][0] == 1384
    assert fixtures.EXPECTED["c11_26"][0] == 1334
    assert fixtures.EXPECTED["c17_25"][0] == 769
    from capclass.linalg import gl_order
    for bad in (1384, 1334, 769):
        assert gl_order(5) % bad != 0
