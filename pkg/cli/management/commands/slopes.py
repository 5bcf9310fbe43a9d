from cli.exports import table_pentes
from cli.options import exiger, lire_joint, lire_pentes, lire_poids, lire_profil
from cli.rapports import document_pentes
from core.decorators import commande_raffinement
from core.exceptions import MissingDataError, RankMismatchError
from parabolic.paraboliques import parse_parabolic
from refine.classification import Refinement, optimal_parabolic
from ._base import CommandeRaffinement


class Command(CommandeRaffinement):
    help = "Audit de non-criticité des pentes d'un raffinement"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--sigma', type=str, help='Permutation en notation en ligne')
        parser.add_argument('--lambda', dest='weight', type=str, help='Poids pur dominant, par exemple "12,1,-1,-12"')
        parser.add_argument('--slopes', type=str, help='Pentes déclarées, par exemple "1=11,2=0,3=11"')
        parser.add_argument('--profile', type=str, help='Valuations t_1..t_2n des θ_i, par exemple "1/2,-23/2,23/2,-1/2"')
        parser.add_argument(
            '--parabolic',
            type=str,
            help='Parabolique (B, G, Q ou composition) ; défaut : parabolique optimal de sigma'
        )
        parser.add_argument('--solve', action='store_true', help='Résout le système linéaire des pentes')
        parser.add_argument(
            '--joint',
            action='append',
            help='Autre raffinement de la même représentation, "sigma:pentes" (répétable)'
        )

    @commande_raffinement
    def handle(self, *args, **options):
        r = Refinement.parse(exiger(options.get('sigma'), '--sigma'))
        lam = lire_poids(options.get('weight'))
        if lam.n != r.n:
            raise RankMismatchError(f"Poids de rang {lam.n} pour un raffinement de rang {r.n}")
        if options.get('parabolic'):
            p = parse_parabolic(options['parabolic'], n=r.n)
        else:
            p = optimal_parabolic(r).optimal

        if options.get('slopes'):
            donnees = lire_pentes(options['slopes'])
        elif options.get('profile'):
            donnees = lire_profil(options['profile'])
        else:
            raise MissingDataError("Fournir --slopes ou --profile")

        document = document_pentes(
            r, lam, p, donnees,
            resoudre=options.get('solve', False),
            joint=lire_joint(options.get('joint')),
        )
        self.ecrire(document, options, table_pentes)
