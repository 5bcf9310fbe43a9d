from cli.exports import table_zeta
from cli.options import exiger
from cli.rapports import document_zeta
from core.decorators import commande_raffinement
from parabolic.paraboliques import parse_parabolic
from ._base import CommandeRaffinement


class Command(CommandeRaffinement):
    help = "Critère de support de l'intégrale zêta tordue pour un parabolique spin"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--parabolic', type=str, help='Composition symétrique, par exemple "2,2"')
        parser.add_argument('--n', type=int, help='Rang, nécessaire pour B, G ou Q')
        parser.add_argument('--beta', type=int, default=1, help='Entier beta >= 1 (défaut : 1)')

    @commande_raffinement
    def handle(self, *args, **options):
        p = parse_parabolic(exiger(options.get('parabolic'), '--parabolic'), n=options.get('n'))
        self.ecrire(document_zeta(p, options['beta']), options, table_zeta)
