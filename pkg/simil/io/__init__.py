from .formats import ( # noqa: F401
    DISTRIBUTION_FORMAT, GAME_FORMAT, WITNESS_FORMAT, FORMAT_VERSION, load_yaml,
)
from .files import ( # noqa: F401
    SimilFile, SimilReader, WitnessBundle,
    DistributionReader, FamilyReader, GameReader, WitnessBundleReader,
    distribution_from_dict, family_from_dict, information_from_dict,
    game_from_dict, bundle_from_dict,
)
from .writers import ( # noqa: F401
    distribution_to_dict, family_to_dict, information_to_dict, game_to_dict,
    bundle_to_dict, write_distribution, write_game, write_bundle,
    write_report, render_report, dump_yaml, dump_json,
)
from .fixtures import FixtureSet, READERS, open_file, reader_for # noqa: F401
