# Package commands pour les commandes Django
