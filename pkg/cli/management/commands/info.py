from cli.exports import table_info
from cli.options import exiger
from cli.rapports import document_info
from core.decorators import commande_raffinement
from refine.classification import Refinement
from ._base import CommandeRaffinement


class Command(CommandeRaffinement):
    help = "Rapport sur un raffinement : ensemble spin, gamma, parabolique optimal, valeurs propres, bascule"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--sigma', type=str, help="Permutation en notation en ligne, par exemple 216345")

    @commande_raffinement
    def handle(self, *args, **options):
        r = Refinement.parse(exiger(options.get('sigma'), '--sigma'))
        self.ecrire(document_info(r), options, table_info)
