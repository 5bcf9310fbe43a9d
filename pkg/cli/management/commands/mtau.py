from django.conf import settings

from cli.exports import table_mtau
from cli.options import exiger
from cli.rapports import document_mtau
from core.decorators import commande_raffinement
from parabolic.paraboliques import parse_parabolic
from ._base import CommandeRaffinement


class Command(CommandeRaffinement):
    help = "Développement normalisé de M_tau(H_[w_n]') pour un parabolique contenu dans (n,n)"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, help='Rang n')
        parser.add_argument('--parabolic', type=str, default='Q', help='B, Q ou composition (défaut : Q)')

    @commande_raffinement
    def handle(self, *args, **options):
        n = exiger(options.get('n'), '--n')
        p = parse_parabolic(options['parabolic'], n=n)
        document = document_mtau(n, p)
        self.ecrire(document, options, lambda d: table_mtau(d, echelle=settings.SHOW_FW_SCALE))
